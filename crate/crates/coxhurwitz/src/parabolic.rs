//! Parabolic Coxeter elements and reduced reflection factorizations.
//!
//! An element is a *standard parabolic Coxeter element* when it is a product
//! of pairwise-distinct simple generators; this is equivalent to
//! `ℓ_T(w) = ℓ(w)`, which is what [`is_standard_parabolic_coxeter_element`]
//! tests.  The generalized notion quantifies over all simple systems of
//! `(W, T)` — sets of reflections that generate `W` and whose conjugates
//! exhaust `T` — and is decided for finite groups by exhaustive search.
//!
//! [`red_enumerate`] lists the set `Red_T(w)` of reduced reflection
//! factorizations, either over the full reflection set or inside a
//! [`ReflectionSubgroup`] over its own reflections `T'`; [`theorem2_check`]
//! compares the two, and [`parabolic_closure_of_factorization`] computes the
//! subgroup `W_c` generated by the entries of a reduced factorization.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use crate::bruhat::is_reduced_factorization;
use crate::coxeter::{CoxeterSystem, Element};
use crate::hurwitz::Factorization;
use crate::reflect::{
    self, enumerate_reflections, reflection_length_with, subgroup_closure, ReflectionSubgroup,
    DEFAULT_WORD_BUDGET,
};
use crate::{Error, Result};

/// Default cap on the number of group elements the finite-only operations in
/// this module will enumerate.
pub const DEFAULT_GROUP_BUDGET: usize = 10_000;

/// True iff `w` is a product of pairwise-distinct simple generators,
/// equivalently iff `ℓ_T(w) = ℓ(w)`.
pub fn is_standard_parabolic_coxeter_element(w: &Element) -> Result<bool> {
    is_standard_parabolic_coxeter_element_with(w, DEFAULT_WORD_BUDGET)
}

/// As [`is_standard_parabolic_coxeter_element`] with an explicit word-length
/// budget for the deletion search behind `ℓ_T`.
pub fn is_standard_parabolic_coxeter_element_with(w: &Element, budget: usize) -> Result<bool> {
    Ok(reflection_length_with(w, None, budget)? == w.length())
}

fn check_reflection_family(cand: &[Element]) -> Result<CoxeterSystem> {
    if cand.is_empty() {
        return Err(Error::Contract(
            "a simple system needs at least one reflection".into(),
        ));
    }
    let sys = cand[0].system().clone();
    for t in cand {
        if t.system() != &sys {
            return Err(Error::SystemMismatch);
        }
        if !t.is_reflection() {
            return Err(Error::Contract(format!(
                "candidate entry {t} is not a reflection"
            )));
        }
    }
    Ok(sys)
}

/// Whether a set of reflections is a simple system for `(W, T)`: it must
/// generate the whole group, and its conjugates must exhaust `T`.  Finite
/// groups only; enumeration past the budget is an error.
pub fn validate_simple_system(cand: &[Element]) -> Result<bool> {
    validate_simple_system_with(cand, DEFAULT_GROUP_BUDGET)
}

/// As [`validate_simple_system`] with an explicit enumeration budget.
pub fn validate_simple_system_with(cand: &[Element], budget: usize) -> Result<bool> {
    let sys = check_reflection_family(cand)?;
    let order = sys.group_order(budget)?;
    let sub = subgroup_closure(cand, budget)?;
    if sub.order()? != order {
        return Ok(false);
    }
    // The reflections of the regenerated structure (W, cand) are the
    // conjugates of cand, which must exhaust T; generating W is not enough
    // by itself.
    let all = enumerate_reflections(&sys, None)?;
    let mut conj: HashSet<Element> = HashSet::new();
    for w in sys.enumerate_elements(budget)? {
        let wi = w.inverse();
        for t in cand {
            conj.insert(&(&w * t) * &wi);
        }
    }
    debug_assert!(conj.iter().all(|t| all.contains(t)));
    Ok(conj.len() == all.reflections().len())
}

/// Whether some group element conjugates one reflection family onto the
/// other as a set.  Exhaustive over the (finite) group.
pub fn are_conjugate_systems(s1: &[Element], s2: &[Element]) -> Result<bool> {
    are_conjugate_systems_with(s1, s2, DEFAULT_GROUP_BUDGET)
}

/// As [`are_conjugate_systems`] with an explicit enumeration budget.
pub fn are_conjugate_systems_with(s1: &[Element], s2: &[Element], budget: usize) -> Result<bool> {
    let sys = check_reflection_family(s1)?;
    check_reflection_family(s2)?;
    if s2[0].system() != &sys {
        return Err(Error::SystemMismatch);
    }
    let target: HashSet<&Element> = s2.iter().collect();
    let source: HashSet<&Element> = s1.iter().collect();
    if source.len() != target.len() {
        return Ok(false);
    }
    for w in sys.enumerate_elements(budget)? {
        let wi = w.inverse();
        let image: HashSet<Element> = s1.iter().map(|t| &(&w * t) * &wi).collect();
        if image.len() == target.len() && s2.iter().all(|t| image.contains(t)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Generalized parabolic Coxeter element test: true iff `w` is a product of
/// pairwise-distinct members of *some* simple system for `(W, T)`.  Decided
/// for finite groups by trying every rank-sized subset of `T`.
pub fn is_parabolic_coxeter_element(w: &Element) -> Result<bool> {
    is_parabolic_coxeter_element_with(w, DEFAULT_GROUP_BUDGET)
}

/// As [`is_parabolic_coxeter_element`] with an explicit enumeration budget.
pub fn is_parabolic_coxeter_element_with(w: &Element, budget: usize) -> Result<bool> {
    let sys = w.system().clone();
    let dist = reflect::reflection_distances(&sys, budget)?;
    let lt = dist[w];
    if lt == 0 {
        return Ok(true);
    }
    let all = enumerate_reflections(&sys, None)?;
    for cand in all
        .reflections()
        .iter()
        .cloned()
        .combinations(sys.rank())
    {
        if !validate_simple_system_with(&cand, budget)? {
            continue;
        }
        // Distinct-member products of a valid system are exactly the
        // elements whose word length over it equals their ambient ℓ_T.
        let sdist = reflect::bfs_tdist(&sys.identity(), &cand, budget)?;
        if sdist.get(w) == Some(&lt) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn red_dfs(
    rest: &Element,
    remaining: usize,
    refls: &[Element],
    dist: &HashMap<Element, usize>,
    prefix: &mut Vec<Element>,
    out: &mut Vec<Vec<Element>>,
) {
    if remaining == 0 {
        debug_assert!(rest.is_identity());
        out.push(prefix.clone());
        return;
    }
    for t in refls {
        let next = t * rest;
        if dist.get(&next) == Some(&(remaining - 1)) {
            prefix.push(t.clone());
            red_dfs(&next, remaining - 1, refls, dist, prefix, out);
            prefix.pop();
        }
    }
}

fn red_core(
    sys: &CoxeterSystem,
    w: &Element,
    refls: &[Element],
    dist: &HashMap<Element, usize>,
) -> Result<Vec<Factorization>> {
    let n = *dist.get(w).ok_or_else(|| {
        Error::Contract("element is not generated by the scope's reflections".into())
    })?;
    let mut tuples = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    red_dfs(w, n, refls, dist, &mut prefix, &mut tuples);
    let mut out = Vec::with_capacity(tuples.len());
    for steps in tuples {
        let f = Factorization::new(sys, steps)?;
        debug_assert_eq!(f.product(), w);
        out.push(f);
    }
    out.sort();
    Ok(out)
}

/// All reduced reflection factorizations `Red_T(w)` over the full reflection
/// set of a finite system, sorted and duplicate-free.
pub fn red_enumerate(w: &Element) -> Result<Vec<Factorization>> {
    red_enumerate_with(w, DEFAULT_GROUP_BUDGET)
}

/// As [`red_enumerate`] with an explicit enumeration budget.
pub fn red_enumerate_with(w: &Element, budget: usize) -> Result<Vec<Factorization>> {
    let sys = w.system().clone();
    let all = enumerate_reflections(&sys, None)?;
    let dist = reflect::reflection_distances(&sys, budget)?;
    red_core(&sys, w, all.reflections(), dist)
}

/// All factorizations `Red_{T'}(w)` of an element of a reflection subgroup,
/// reduced with respect to the subgroup's own reflections `T'`.
pub fn red_enumerate_in(w: &Element, sub: &ReflectionSubgroup) -> Result<Vec<Factorization>> {
    red_enumerate_in_with(w, sub, DEFAULT_GROUP_BUDGET)
}

/// As [`red_enumerate_in`] with an explicit enumeration budget.
pub fn red_enumerate_in_with(
    w: &Element,
    sub: &ReflectionSubgroup,
    budget: usize,
) -> Result<Vec<Factorization>> {
    if w.system() != sub.system() {
        return Err(Error::SystemMismatch);
    }
    if !sub.contains(w) {
        return Err(Error::Contract(format!(
            "element {w} is not in the reflection subgroup"
        )));
    }
    let refls = sub.reflections()?;
    let dist = reflect::bfs_tdist(&sub.system().identity(), refls, budget)?;
    red_core(sub.system(), w, refls, &dist)
}

/// Whether `Red_T(w) = Red_{T'}(w)` for an element `w` of the subgroup:
/// every globally reduced factorization of `w` already lives inside `W'` and
/// stays reduced there.
pub fn theorem2_check(sub: &ReflectionSubgroup, w: &Element) -> Result<bool> {
    theorem2_check_with(sub, w, DEFAULT_GROUP_BUDGET)
}

/// As [`theorem2_check`] with an explicit enumeration budget.
pub fn theorem2_check_with(sub: &ReflectionSubgroup, w: &Element, budget: usize) -> Result<bool> {
    if w.system() != sub.system() {
        return Err(Error::SystemMismatch);
    }
    if !sub.contains(w) {
        return Err(Error::Contract(format!(
            "element {w} is not in the reflection subgroup"
        )));
    }
    let ambient = red_enumerate_with(w, budget)?;
    let inner = red_enumerate_in_with(w, sub, budget)?;
    // Both lists are sorted and duplicate-free, so set equality is equality.
    Ok(ambient == inner)
}

/// The subgroup `W_c` generated by the entries of a reduced factorization.
/// By Hurwitz transitivity it depends only on the product, not on the chosen
/// factorization.
pub fn parabolic_closure_of_factorization(f: &Factorization) -> Result<ReflectionSubgroup> {
    parabolic_closure_of_factorization_with(f, DEFAULT_GROUP_BUDGET)
}

/// As [`parabolic_closure_of_factorization`] with an explicit closure budget.
pub fn parabolic_closure_of_factorization_with(
    f: &Factorization,
    budget: usize,
) -> Result<ReflectionSubgroup> {
    if f.steps().is_empty() {
        return Err(Error::Contract(
            "empty factorization has no parabolic closure".into(),
        ));
    }
    if !is_reduced_factorization(f.steps())? {
        return Err(Error::Contract("factorization is not reduced".into()));
    }
    subgroup_closure(f.steps(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxEntry;
    use crate::hurwitz::hurwitz_orbit;

    fn a2() -> CoxeterSystem {
        CoxeterSystem::type_a(2)
    }

    fn a3() -> CoxeterSystem {
        CoxeterSystem::type_a(3)
    }

    fn b3() -> CoxeterSystem {
        CoxeterSystem::from_links(3, &[(0, 1, CoxEntry::Finite(4)), (1, 2, CoxEntry::Finite(3))])
            .unwrap()
    }

    fn el(sys: &CoxeterSystem, word: &[usize]) -> Element {
        sys.element_from_word(word).unwrap()
    }

    #[test]
    fn standard_parabolic_characterization() {
        let a2 = a2();
        assert!(is_standard_parabolic_coxeter_element(&a2.identity()).unwrap());
        assert!(is_standard_parabolic_coxeter_element(&el(&a2, &[0, 1])).unwrap());
        assert!(is_standard_parabolic_coxeter_element(&el(&a2, &[0])).unwrap());
        // ℓ = 3 but ℓ_T = 1.
        assert!(!is_standard_parabolic_coxeter_element(&el(&a2, &[0, 1, 0])).unwrap());

        let a3 = a3();
        assert!(is_standard_parabolic_coxeter_element(&el(&a3, &[0, 2])).unwrap());
        let w0 = el(&a3, &[0, 1, 0, 2, 1, 0]);
        assert_eq!(w0.length(), 6);
        assert!(!is_standard_parabolic_coxeter_element(&w0).unwrap());
    }

    #[test]
    fn length_equality_crosscheck_against_distinct_letter_words() {
        // ℓ_T(w) = ℓ(w) iff some reduced word of w repeats no letter.
        for sys in [a2(), CoxeterSystem::dihedral(Some(4))] {
            for w in sys.enumerate_elements(64).unwrap() {
                let by_length = is_standard_parabolic_coxeter_element(&w).unwrap();
                let by_words = w
                    .reduced_words()
                    .iter()
                    .any(|word| word.iter().all_unique());
                assert_eq!(by_length, by_words, "mismatch at {w}");
            }
        }
    }

    #[test]
    fn simple_system_validation() {
        let a2 = a2();
        let s1 = a2.generator(0).unwrap();
        let s2 = a2.generator(1).unwrap();
        assert!(validate_simple_system(&[s1.clone(), s2.clone()]).unwrap());
        // In A2 every pair of distinct reflections is a simple system.
        assert!(validate_simple_system(&[s1.clone(), el(&a2, &[0, 1, 0])]).unwrap());
        // A single reflection generates too little.
        assert!(!validate_simple_system(&[s1.clone()]).unwrap());
        // Non-reflection entries are rejected outright.
        assert!(matches!(
            validate_simple_system(&[el(&a2, &[0, 1])]),
            Err(Error::Contract(_))
        ));

        // In I2(6) the reflections s1 and s1s2s1 sit in different conjugacy
        // classes and their product has order six, so the pair is another
        // simple system; a pair from a single class never generates.
        let i6 = CoxeterSystem::dihedral(Some(6));
        let pair = [el(&i6, &[0]), el(&i6, &[0, 1, 0])];
        let sub = subgroup_closure(&pair, 64).unwrap();
        assert_eq!(sub.order().unwrap(), 12);
        assert!(validate_simple_system(&pair).unwrap());
        let same_class = [el(&i6, &[0]), el(&i6, &[0, 1, 0, 1, 0])];
        assert!(!validate_simple_system(&same_class).unwrap());

        // The pentagon admits both the standard system and the distance-two
        // system.
        let i5 = CoxeterSystem::dihedral(Some(5));
        assert!(validate_simple_system(&[el(&i5, &[0]), el(&i5, &[1])]).unwrap());
        assert!(validate_simple_system(&[el(&i5, &[0]), el(&i5, &[1, 0, 1])]).unwrap());
    }

    #[test]
    fn conjugacy_of_simple_systems() {
        let i5 = CoxeterSystem::dihedral(Some(5));
        let standard = [el(&i5, &[0]), el(&i5, &[1])];
        let distance_two = [el(&i5, &[0]), el(&i5, &[1, 0, 1])];
        // Valid but genuinely different: no group element carries one onto
        // the other.
        assert!(!are_conjugate_systems(&standard, &distance_two).unwrap());
        let w = el(&i5, &[0, 1]);
        let wi = w.inverse();
        let moved: Vec<Element> = standard.iter().map(|t| &(&w * t) * &wi).collect();
        assert!(are_conjugate_systems(&standard, &moved).unwrap());

        // In A2 all pairs of distinct reflections are conjugate.
        let a2 = a2();
        assert!(are_conjugate_systems(
            &[el(&a2, &[0]), el(&a2, &[1])],
            &[el(&a2, &[1]), el(&a2, &[0, 1, 0])],
        )
        .unwrap());

        // In I2(6) conjugation preserves the two reflection classes, and
        // every valid pair straddles them, so all simple systems there are
        // conjugate.
        let i6 = CoxeterSystem::dihedral(Some(6));
        assert!(!are_conjugate_systems(&[el(&i6, &[0])], &[el(&i6, &[1])]).unwrap());
        assert!(are_conjugate_systems(&[el(&i6, &[0])], &[el(&i6, &[0, 1, 0, 1, 0])]).unwrap());
        assert!(are_conjugate_systems(
            &[el(&i6, &[0]), el(&i6, &[1])],
            &[el(&i6, &[0]), el(&i6, &[0, 1, 0])],
        )
        .unwrap());
        // Size mismatch is an immediate no.
        assert!(!are_conjugate_systems(&[el(&i6, &[0])], &[el(&i6, &[0]), el(&i6, &[1])]).unwrap());
    }

    #[test]
    fn generalized_parabolic_elements() {
        let a2 = a2();
        let t = el(&a2, &[0, 1, 0]);
        assert!(!is_standard_parabolic_coxeter_element(&t).unwrap());
        assert!(is_parabolic_coxeter_element(&t).unwrap());

        // ρ² in I2(5) is the Coxeter element of the distance-two system.
        let i5 = CoxeterSystem::dihedral(Some(5));
        let rho2 = el(&i5, &[0, 1, 0, 1]);
        assert!(!is_standard_parabolic_coxeter_element(&rho2).unwrap());
        assert!(is_parabolic_coxeter_element(&rho2).unwrap());

        // In I2(6) every valid simple system has a Coxeter element of order
        // six, so ρ² (order three) is not parabolic for any of them.
        let i6 = CoxeterSystem::dihedral(Some(6));
        let rho2 = el(&i6, &[0, 1, 0, 1]);
        assert!(!is_parabolic_coxeter_element(&rho2).unwrap());
    }

    #[test]
    fn red_enumeration_matches_hurwitz_orbits() {
        let a2 = a2();
        let s1 = el(&a2, &[0]);
        let reds = red_enumerate(&s1).unwrap();
        assert_eq!(reds, vec![Factorization::new(&a2, vec![s1.clone()]).unwrap()]);

        let c = el(&a2, &[0, 1]);
        let reds = red_enumerate(&c).unwrap();
        assert_eq!(reds.len(), 3);
        let seed = Factorization::from_words(&a2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(reds, hurwitz_orbit(&seed, 100).unwrap());

        let a3 = a3();
        let c = el(&a3, &[0, 1, 2]);
        let reds = red_enumerate(&c).unwrap();
        assert_eq!(reds.len(), 16);
        let seed = Factorization::from_words(&a3, &[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(reds, hurwitz_orbit(&seed, 100).unwrap());

        // The identity has exactly the empty factorization.
        let reds = red_enumerate(&a3.identity()).unwrap();
        assert_eq!(reds, vec![Factorization::new(&a3, vec![]).unwrap()]);
    }

    #[test]
    fn red_enumeration_in_subgroups() {
        let b3 = b3();
        let sub = subgroup_closure(&[b3.generator(0).unwrap(), b3.generator(1).unwrap()], 100)
            .unwrap();
        assert_eq!(sub.order().unwrap(), 8);
        assert_eq!(sub.reflections().unwrap().len(), 4);

        let w = el(&b3, &[0, 1]);
        let inner = red_enumerate_in(&w, &sub).unwrap();
        assert_eq!(inner.len(), 4);
        for f in &inner {
            for t in f.steps() {
                assert!(sub.contains(t));
            }
        }
        assert_eq!(inner, red_enumerate(&w).unwrap());

        // Elements outside the subgroup are a contract violation.
        assert!(matches!(
            red_enumerate_in(&el(&b3, &[2]), &sub),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn theorem2_on_standard_parabolics_of_a3() {
        let a3 = a3();
        let gens = a3.generators();
        for mask in 1u32..8 {
            let part: Vec<Element> = (0..3)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| gens[i].clone())
                .collect();
            let sub = subgroup_closure(&part, 100).unwrap();
            for w in sub.elements() {
                assert!(
                    theorem2_check(&sub, w).unwrap(),
                    "Red_T vs Red_T' differ at {w}"
                );
            }
        }
    }

    #[test]
    fn parabolic_closures() {
        let a3 = a3();
        let f = Factorization::from_words(&a3, &[vec![0], vec![1]]).unwrap();
        let sub = parabolic_closure_of_factorization(&f).unwrap();
        assert_eq!(sub.order().unwrap(), 6);

        // (s1s2s1, s1) generates the same standard parabolic.
        let g = Factorization::from_words(&a3, &[vec![0, 1, 0], vec![0]]).unwrap();
        let other = parabolic_closure_of_factorization(&g).unwrap();
        let lhs: HashSet<&Element> = sub.elements().iter().collect();
        let rhs: HashSet<&Element> = other.elements().iter().collect();
        assert_eq!(lhs, rhs);

        // Every reduced factorization of a Coxeter element closes to the
        // whole group.
        let c = el(&a3, &[0, 1, 2]);
        for f in red_enumerate(&c).unwrap() {
            let sub = parabolic_closure_of_factorization(&f).unwrap();
            assert_eq!(sub.order().unwrap(), 24);
        }

        // Non-reduced tuples are rejected.
        let s1 = el(&a3, &[0]);
        let bad = Factorization::new(&a3, vec![s1.clone(), s1]).unwrap();
        assert!(matches!(
            parabolic_closure_of_factorization(&bad),
            Err(Error::Contract(_))
        ));
        let empty = Factorization::new(&a3, vec![]).unwrap();
        assert!(matches!(
            parabolic_closure_of_factorization(&empty),
            Err(Error::Contract(_))
        ));
    }
}
