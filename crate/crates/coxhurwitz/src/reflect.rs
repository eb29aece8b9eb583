//! Reflections of a Coxeter system: enumeration of T, reflection length ℓ_T,
//! reflection subgroups W' with T' = T ∩ W', canonical simple systems, and
//! the dihedral reflection line.

use std::collections::{HashMap, HashSet, VecDeque};
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::coxeter::{CoxeterSystem, Element, Root, RootSign};
use crate::{Error, Result};

/// Default cap on ℓ(w) for the deletion search behind ℓ_T, which is
/// exponential in the word length.
pub const DEFAULT_WORD_BUDGET: usize = 16;

/// Cap on the conjugation closure when the full reflection set is requested;
/// an infinite system without a depth bound trips this.
pub const DEFAULT_REFLECTION_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    /// All of T (finite systems).
    Full,
    /// All reflections t with ℓ(t) ≤ the bound.
    DepthBounded(usize),
}

/// A deduplicated, ShortLex-sorted set of reflections of one system.
pub struct ReflectionSet {
    sys: CoxeterSystem,
    reflections: Vec<Element>,
    completeness: Completeness,
}

impl ReflectionSet {
    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn reflections(&self) -> &[Element] {
        &self.reflections
    }

    pub fn len(&self) -> usize {
        self.reflections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reflections.is_empty()
    }

    pub fn completeness(&self) -> Completeness {
        self.completeness
    }

    pub fn contains(&self, t: &Element) -> bool {
        self.reflections.binary_search(t).is_ok()
    }

    /// Whether this set contains every reflection that can appear on an edge
    /// of the Bruhat ball of the given radius.  An edge inside the ball joins
    /// w and wt with ℓ ≤ radius on both ends, so ℓ(t) ≤ 2·radius − 1.
    pub fn covers_radius(&self, radius: usize) -> bool {
        match self.completeness {
            Completeness::Full => true,
            Completeness::DepthBounded(d) => radius == 0 || d >= 2 * radius - 1,
        }
    }
}

/// All reflections T = {wsw⁻¹}, or the ones of length ≤ `depth`.
///
/// Without a depth bound the set is closed exhaustively (finite systems
/// only; an infinite system exceeds [`DEFAULT_REFLECTION_BUDGET`]).  With a
/// bound, reflections are generated through the positive-root BFS: the root
/// α at BFS depth k corresponds to the reflection s_α of length 2k − 1.
pub fn enumerate_reflections(sys: &CoxeterSystem, depth: Option<usize>) -> Result<ReflectionSet> {
    match depth {
        None => {
            if let Some(cached) = sys.reflections_cache().get() {
                return Ok(ReflectionSet {
                    sys: sys.clone(),
                    reflections: cached.clone(),
                    completeness: Completeness::Full,
                });
            }
            let gens = sys.generators();
            let mut seen: HashSet<Element> = gens.iter().cloned().collect();
            let mut queue: VecDeque<Element> = gens.iter().cloned().collect();
            let mut out = gens;
            while let Some(t) = queue.pop_front() {
                for s in 0..sys.rank() {
                    let u = t.gen_mul(s).mul_gen(s);
                    if seen.contains(&u) {
                        continue;
                    }
                    if out.len() >= DEFAULT_REFLECTION_BUDGET {
                        return Err(Error::EnumerationBudgetExceeded {
                            budget: DEFAULT_REFLECTION_BUDGET,
                        });
                    }
                    seen.insert(u.clone());
                    out.push(u.clone());
                    queue.push_back(u);
                }
            }
            out.sort();
            let cached = sys.reflections_cache().get_or_init(|| out);
            Ok(ReflectionSet {
                sys: sys.clone(),
                reflections: cached.clone(),
                completeness: Completeness::Full,
            })
        }
        Some(d) => {
            let dp_max = (d + 1) / 2;
            let mut out: Vec<Element> = Vec::new();
            let mut seen_roots: HashSet<Root> = HashSet::new();
            // (positive root, its reflection); one BFS level of root depth.
            let mut frontier: Vec<(Root, Element)> = Vec::new();
            if dp_max >= 1 {
                for s in 0..sys.rank() {
                    let root = sys.simple_root(s)?;
                    seen_roots.insert(root.clone());
                    frontier.push((root, sys.generator(s)?));
                }
                out.extend(frontier.iter().map(|(_, t)| t.clone()));
            }
            for level in 2..=dp_max {
                let mut next = Vec::new();
                for (root, t) in &frontier {
                    for s in 0..sys.rank() {
                        let gen = sys.generator(s)?;
                        let img = gen.apply_to_root(root);
                        if img == *root || seen_roots.contains(&img) {
                            continue;
                        }
                        if matches!(img.sign()?, RootSign::Negative) {
                            continue; // only α_s ↦ −α_s leaves the positives
                        }
                        let refl = t.gen_mul(s).mul_gen(s);
                        debug_assert_eq!(refl.length(), 2 * level - 1);
                        seen_roots.insert(img.clone());
                        next.push((img, refl));
                    }
                }
                out.extend(next.iter().map(|(_, t)| t.clone()));
                frontier = next;
            }
            out.retain(|t| t.length() <= d);
            out.sort();
            Ok(ReflectionSet {
                sys: sys.clone(),
                reflections: out,
                completeness: Completeness::DepthBounded(d),
            })
        }
    }
}

/// ℓ_T(w) with the default word budget; see [`reflection_length_with`].
pub fn reflection_length(w: &Element) -> Result<usize> {
    reflection_length_with(w, None, DEFAULT_WORD_BUDGET)
}

/// Reflection length ℓ_T(w): the minimal number of positions that can be
/// deleted from a reduced word of w to leave a word evaluating to the
/// identity (the value does not depend on the chosen reduced word).
///
/// The search enumerates deletion sets by increasing size, skipping sizes of
/// the wrong parity (ℓ_T ≡ ℓ mod 2), and evaluates candidates from
/// precomputed range products.  Exponential in ℓ(w), hence the budget.
pub fn reflection_length_with(
    w: &Element,
    reduced_word: Option<&[usize]>,
    budget: usize,
) -> Result<usize> {
    let word: Vec<usize> = match reduced_word {
        Some(rw) => {
            if w.system().element_from_word(rw)? != *w {
                return Err(Error::Contract(
                    "supplied word does not evaluate to the element".into(),
                ));
            }
            if rw.len() != w.length() {
                return Err(Error::Contract("supplied word is not reduced".into()));
            }
            rw.to_vec()
        }
        None => w.canonical_word().clone(),
    };
    let k = word.len();
    if k > budget {
        return Err(Error::WordBudgetExceeded { length: k, budget });
    }
    if k == 0 {
        return Ok(0);
    }
    let sys = w.system();
    let id = sys.identity();
    // range[i][j] = s_{word[i]} ⋯ s_{word[j−1]}.
    let mut range = vec![vec![id.clone(); k + 1]; k + 1];
    for i in 0..=k {
        for j in i..k {
            range[i][j + 1] = range[i][j].mul_gen(word[j]);
        }
    }
    let mut d = k % 2;
    while d <= k {
        for combo in (0..k).combinations(d) {
            let mut prod = id.clone();
            let mut prev = 0usize;
            for &p in &combo {
                prod = &prod * &range[prev][p];
                prev = p + 1;
            }
            prod = &prod * &range[prev][k];
            if prod.is_identity() {
                return Ok(d);
            }
        }
        d += 2;
    }
    Err(Error::Internal(
        "deletion search failed to reach the identity".into(),
    ))
}

/// Undirected BFS distances from `start` through right multiplication by the
/// given reflections; fails if more than `budget` elements are reached.
pub(crate) fn bfs_tdist(
    start: &Element,
    refls: &[Element],
    budget: usize,
) -> Result<HashMap<Element, usize>> {
    let mut dist = HashMap::new();
    dist.insert(start.clone(), 0usize);
    let mut queue = VecDeque::new();
    queue.push_back(start.clone());
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        for t in refls {
            let v = &u * t;
            if dist.contains_key(&v) {
                continue;
            }
            if dist.len() >= budget {
                return Err(Error::EnumerationBudgetExceeded { budget });
            }
            dist.insert(v.clone(), du + 1);
            queue.push_back(v);
        }
    }
    Ok(dist)
}

/// Distances from e in the undirected Bruhat graph of a finite system,
/// cached on the system.  `budget` bounds the group order.
pub(crate) fn reflection_distances(
    sys: &CoxeterSystem,
    budget: usize,
) -> Result<&HashMap<Element, usize>> {
    if let Some(m) = sys.refl_dist_cache().get() {
        return Ok(m);
    }
    let full = enumerate_reflections(sys, None)?;
    let map = bfs_tdist(&sys.identity(), full.reflections(), budget)?;
    Ok(sys.refl_dist_cache().get_or_init(|| map))
}

/// A reflection subgroup W' = ⟨generators⟩ with its reflections T' = T ∩ W'.
pub struct ReflectionSubgroup {
    sys: CoxeterSystem,
    generators: Vec<Element>,
    elements: Vec<Element>,
    element_set: HashSet<Element>,
    reflections: Vec<Element>,
    complete: bool,
    canonical: OnceLock<Vec<Element>>,
}

/// Close a set of reflections into the subgroup they generate, by BFS under
/// right multiplication.  If the closure exceeds `budget`, a partial result
/// is returned with `is_complete() == false`; operations that need all of W'
/// then fail with [`Error::IncompleteSubgroup`].
pub fn subgroup_closure(gens: &[Element], budget: usize) -> Result<ReflectionSubgroup> {
    if gens.is_empty() {
        return Err(Error::Contract("subgroup needs at least one generator".into()));
    }
    let sys = gens[0].system().clone();
    for g in gens {
        if g.system() != &sys {
            return Err(Error::SystemMismatch);
        }
        if !g.is_reflection() {
            return Err(Error::Contract(format!(
                "subgroup generator {g} is not a reflection"
            )));
        }
    }
    let mut generators: Vec<Element> = Vec::new();
    for g in gens {
        if !generators.contains(g) {
            generators.push(g.clone());
        }
    }
    generators.sort();

    let id = sys.identity();
    let mut element_set: HashSet<Element> = HashSet::new();
    element_set.insert(id.clone());
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::new();
    queue.push_back(id);
    let mut complete = true;
    'bfs: while let Some(u) = queue.pop_front() {
        for g in &generators {
            let v = &u * g;
            if element_set.contains(&v) {
                continue;
            }
            if elements.len() >= budget {
                complete = false;
                break 'bfs;
            }
            element_set.insert(v.clone());
            elements.push(v.clone());
            queue.push_back(v);
        }
    }
    elements.sort();
    let mut reflections: Vec<Element> = elements
        .iter()
        .filter(|w| w.is_reflection())
        .cloned()
        .collect();
    reflections.sort();
    Ok(ReflectionSubgroup {
        sys,
        generators,
        elements,
        element_set,
        reflections,
        complete,
        canonical: OnceLock::new(),
    })
}

impl ReflectionSubgroup {
    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// The enumerated elements (all of W' iff `is_complete`).
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn order(&self) -> Result<usize> {
        if !self.complete {
            return Err(Error::IncompleteSubgroup);
        }
        Ok(self.elements.len())
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.element_set.contains(w)
    }

    /// T' = T ∩ W', sorted.
    pub fn reflections(&self) -> Result<&[Element]> {
        if !self.complete {
            return Err(Error::IncompleteSubgroup);
        }
        Ok(&self.reflections)
    }

    /// The canonical simple system of W': the reflections t ∈ T' whose action
    /// keeps every other positive root of W' positive.  Sorted by ShortLex;
    /// verified to generate W' before being returned.
    pub fn canonical_simple_system(&self) -> Result<Vec<Element>> {
        if !self.complete {
            return Err(Error::IncompleteSubgroup);
        }
        if let Some(v) = self.canonical.get() {
            return Ok(v.clone());
        }
        let refls = &self.reflections;
        let roots: Vec<Root> = refls
            .iter()
            .map(|t| t.reflection_root())
            .collect::<Result<_>>()?;
        let mut simples = Vec::new();
        for (i, t) in refls.iter().enumerate() {
            let mut simple = true;
            for (j, r) in roots.iter().enumerate() {
                if i == j {
                    continue;
                }
                if matches!(t.apply_to_root(r).sign()?, RootSign::Negative) {
                    simple = false;
                    break;
                }
            }
            if simple {
                simples.push(t.clone());
            }
        }
        // The simples must generate all of W'.
        let mut seen: HashSet<Element> = HashSet::new();
        seen.insert(self.sys.identity());
        let mut queue: VecDeque<Element> = VecDeque::new();
        queue.push_back(self.sys.identity());
        while let Some(u) = queue.pop_front() {
            for t in &simples {
                let v = &u * t;
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        if seen.len() != self.elements.len() {
            return Err(Error::Internal(
                "canonical simple system does not generate the subgroup".into(),
            ));
        }
        Ok(self.canonical.get_or_init(|| simples).clone())
    }
}

/// The indexed family ρ^k t1 ρ^{−k}, ρ = t1t2, for k in the given range —
/// the reflections of the dihedral group ⟨t1, t2⟩ in line order.  In the
/// finite case the family is periodic with period the order of ρ.
pub fn dihedral_reflection_line(
    t1: &Element,
    t2: &Element,
    ks: RangeInclusive<i64>,
) -> Result<Vec<(i64, Element)>> {
    if t1.system() != t2.system() {
        return Err(Error::SystemMismatch);
    }
    if !t1.is_reflection() || !t2.is_reflection() {
        return Err(Error::Contract("line endpoints must be reflections".into()));
    }
    if t1 == t2 {
        return Err(Error::Contract("line endpoints must be distinct".into()));
    }
    let (lo, hi) = (*ks.start(), *ks.end());
    if lo > hi {
        return Ok(Vec::new());
    }
    let rho = t1 * t2;
    let rho_inv = rho.inverse();
    let mut by_k: HashMap<i64, Element> = HashMap::new();
    let mut cur = t1.clone();
    by_k.insert(0, cur.clone());
    for k in 1..=hi.max(0) {
        cur = &(&rho * &cur) * &rho_inv;
        by_k.insert(k, cur.clone());
    }
    cur = t1.clone();
    for k in 1..=(-lo.min(0)) {
        cur = &(&rho_inv * &cur) * &rho;
        by_k.insert(-k, cur.clone());
    }
    Ok((lo..=hi).map(|k| (k, by_k[&k].clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxEntry;

    fn b3() -> CoxeterSystem {
        CoxeterSystem::from_links(3, &[(0, 1, CoxEntry::Finite(4)), (1, 2, CoxEntry::Finite(3))])
            .unwrap()
    }

    fn h3() -> CoxeterSystem {
        CoxeterSystem::from_links(3, &[(0, 1, CoxEntry::Finite(5)), (1, 2, CoxEntry::Finite(3))])
            .unwrap()
    }

    fn affine_a2() -> CoxeterSystem {
        CoxeterSystem::from_links(
            3,
            &[
                (0, 1, CoxEntry::Finite(3)),
                (1, 2, CoxEntry::Finite(3)),
                (0, 2, CoxEntry::Finite(3)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn full_reflection_sets() {
        let a2 = CoxeterSystem::type_a(2);
        let set = enumerate_reflections(&a2, None).unwrap();
        assert_eq!(set.completeness(), Completeness::Full);
        let words: Vec<_> = set.reflections().iter().map(|t| t.canonical_word().clone()).collect();
        assert_eq!(words, vec![vec![0], vec![1], vec![0, 1, 0]]);

        for (sys, count) in [
            (CoxeterSystem::dihedral(Some(4)), 4),
            (CoxeterSystem::dihedral(Some(5)), 5),
            (CoxeterSystem::type_a(3), 6),
            (b3(), 9),
            (h3(), 15),
        ] {
            let set = enumerate_reflections(&sys, None).unwrap();
            assert_eq!(set.len(), count);
            // Cross-check against a filter over the whole group.
            let filtered = sys
                .enumerate_elements(1000)
                .unwrap()
                .into_iter()
                .filter(|w| w.is_reflection())
                .count();
            assert_eq!(set.len(), filtered);
            // Closure under conjugation by members.
            for t in set.reflections() {
                for u in set.reflections() {
                    let conj = &(u * t) * &u.inverse();
                    assert!(set.contains(&conj));
                }
            }
        }
    }

    #[test]
    fn infinite_without_depth_is_an_error() {
        let inf = CoxeterSystem::dihedral(None);
        assert!(matches!(
            enumerate_reflections(&inf, None),
            Err(Error::EnumerationBudgetExceeded { .. })
        ));
    }

    #[test]
    fn depth_bounded_enumeration() {
        let inf = CoxeterSystem::dihedral(None);
        let set = enumerate_reflections(&inf, Some(5)).unwrap();
        assert_eq!(set.completeness(), Completeness::DepthBounded(5));
        assert_eq!(set.len(), 6); // lengths 1,1,3,3,5,5
        assert!(set.reflections().iter().all(|t| t.length() <= 5 && t.is_reflection()));

        let aff = affine_a2();
        let set = enumerate_reflections(&aff, Some(3)).unwrap();
        assert_eq!(set.len(), 6); // three simples, three sts-conjugates

        // Depth 0 is the empty set; depth covering a finite group gives T.
        assert!(enumerate_reflections(&inf, Some(0)).unwrap().is_empty());
        let a3 = CoxeterSystem::type_a(3);
        let bounded = enumerate_reflections(&a3, Some(5)).unwrap();
        assert_eq!(bounded.len(), 6);
        // Radius coverage arithmetic.
        assert!(bounded.covers_radius(3));
        assert!(!bounded.covers_radius(4));
        assert!(enumerate_reflections(&a3, None).unwrap().covers_radius(100));
    }

    #[test]
    fn reflection_length_basics() {
        let a2 = CoxeterSystem::type_a(2);
        assert_eq!(reflection_length(&a2.identity()).unwrap(), 0);
        let refl = a2.element_from_word(&[0, 1, 0]).unwrap();
        assert_eq!(reflection_length(&refl).unwrap(), 1);
        let rot = a2.element_from_word(&[0, 1]).unwrap();
        assert_eq!(reflection_length(&rot).unwrap(), 2);
        // The longest element of B3 is −1, a product of 3 orthogonal reflections.
        let b3 = b3();
        let w0 = b3.element_from_word(&[0, 1, 0, 1, 2, 1, 0, 1, 2]).unwrap();
        assert_eq!(w0.length(), 9);
        assert_eq!(reflection_length(&w0).unwrap(), 3);
    }

    #[test]
    fn reflection_length_word_argument_and_budget() {
        let a2 = CoxeterSystem::type_a(2);
        let w = a2.element_from_word(&[0, 1, 0]).unwrap();
        // Any reduced word gives the same answer.
        assert_eq!(reflection_length_with(&w, Some(&[1, 0, 1]), 16).unwrap(), 1);
        // Wrong element or non-reduced word is rejected.
        assert!(matches!(
            reflection_length_with(&w, Some(&[0, 1]), 16),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            reflection_length_with(&a2.identity(), Some(&[0, 0]), 16),
            Err(Error::Contract(_))
        ));
        // Budget guard.
        let inf = CoxeterSystem::dihedral(None);
        let long = inf.element_from_word(&(0..20).map(|i| i % 2).collect::<Vec<_>>()).unwrap();
        assert_eq!(long.length(), 20);
        assert!(matches!(
            reflection_length(&long),
            Err(Error::WordBudgetExceeded { length: 20, budget: 16 })
        ));
        assert_eq!(reflection_length_with(&long, None, 20).unwrap(), 2);
    }

    #[test]
    fn reflection_length_invariants_on_a3() {
        let a3 = CoxeterSystem::type_a(3);
        let all = a3.enumerate_elements(100).unwrap();
        for w in &all {
            let lt = reflection_length(w).unwrap();
            assert!(lt <= w.length());
            assert_eq!(lt % 2, w.length() % 2);
        }
        // Conjugation invariance (deterministic sample: conjugate by everything).
        let probe = a3.element_from_word(&[0, 1]).unwrap();
        let lt = reflection_length(&probe).unwrap();
        for u in &all {
            let conj = &(u * &probe) * &u.inverse();
            assert_eq!(reflection_length(&conj).unwrap(), lt);
        }
    }

    #[test]
    fn tdist_matches_reflection_length() {
        for sys in [CoxeterSystem::type_a(2), CoxeterSystem::dihedral(Some(4))] {
            let dist = reflection_distances(&sys, 1000).unwrap();
            for w in sys.enumerate_elements(1000).unwrap() {
                assert_eq!(dist[&w], reflection_length(&w).unwrap());
            }
        }
    }

    #[test]
    fn subgroup_closure_basics() {
        let a2 = CoxeterSystem::type_a(2);
        let s1 = a2.generator(0).unwrap();
        let sub = subgroup_closure(&[s1.clone()], 100).unwrap();
        assert!(sub.is_complete());
        assert_eq!(sub.order().unwrap(), 2);
        assert_eq!(sub.reflections().unwrap(), &[s1.clone()]);
        assert!(sub.contains(&a2.identity()));

        let t = a2.element_from_word(&[0, 1, 0]).unwrap();
        let sub = subgroup_closure(&[s1.clone(), t], 100).unwrap();
        assert_eq!(sub.order().unwrap(), 6);
        assert_eq!(sub.reflections().unwrap().len(), 3);

        // Non-reflection generators are rejected.
        let rot = a2.element_from_word(&[0, 1]).unwrap();
        assert!(matches!(subgroup_closure(&[rot], 100), Err(Error::Contract(_))));
        assert!(subgroup_closure(&[], 100).is_err());
    }

    #[test]
    fn incomplete_subgroup_is_flagged() {
        let inf = CoxeterSystem::dihedral(None);
        let gens = inf.generators();
        let sub = subgroup_closure(&gens, 10).unwrap();
        assert!(!sub.is_complete());
        assert_eq!(sub.elements().len(), 10);
        assert!(matches!(sub.order(), Err(Error::IncompleteSubgroup)));
        assert!(matches!(sub.reflections(), Err(Error::IncompleteSubgroup)));
        assert!(matches!(
            sub.canonical_simple_system(),
            Err(Error::IncompleteSubgroup)
        ));
    }

    #[test]
    fn canonical_simple_systems() {
        // Standard parabolic keeps its simples.
        let a3 = CoxeterSystem::type_a(3);
        let s = a3.generators();
        let sub = subgroup_closure(&[s[0].clone(), s[1].clone()], 100).unwrap();
        assert_eq!(sub.canonical_simple_system().unwrap(), vec![s[0].clone(), s[1].clone()]);

        // Rank one.
        let t = a3.element_from_word(&[0, 1, 0]).unwrap();
        let sub = subgroup_closure(&[t.clone()], 100).unwrap();
        assert_eq!(sub.canonical_simple_system().unwrap(), vec![t]);

        // ⟨s1, s3s2s3⟩ in A3: the generators are already the canonical simples.
        let u = a3.element_from_word(&[2, 1, 2]).unwrap();
        let sub = subgroup_closure(&[s[0].clone(), u.clone()], 100).unwrap();
        assert!(sub.is_complete());
        let simples = sub.canonical_simple_system().unwrap();
        assert_eq!(simples, vec![s[0].clone(), u]);

        // A dihedral pair in B3 with product of order 3.
        let b3 = b3();
        let g = b3.generators();
        let conj = |w: &Element, t: &Element| &(w * t) * &w.inverse();
        let u = b3.element_from_word(&[0, 1]).unwrap();
        let t1 = conj(&u, &g[1]);
        let t2 = conj(&u, &g[2]);
        assert_eq!((&t1 * &t2).order(10), Some(3));
        let sub = subgroup_closure(&[t1, t2], 100).unwrap();
        assert_eq!(sub.order().unwrap(), 6);
        assert_eq!(sub.reflections().unwrap().len(), 3);
        let simples = sub.canonical_simple_system().unwrap();
        assert_eq!(simples.len(), 2);
        // The simples generate and lie in T'.
        for t in &simples {
            assert!(sub.reflections().unwrap().contains(t));
        }
    }

    #[test]
    fn dihedral_line() {
        let a2 = CoxeterSystem::type_a(2);
        let s1 = a2.generator(0).unwrap();
        let s2 = a2.generator(1).unwrap();
        let line = dihedral_reflection_line(&s1, &s2, 0..=2).unwrap();
        assert_eq!(line[0].1, s1);
        let mut got: Vec<&Element> = line.iter().map(|(_, t)| t).collect();
        got.sort();
        got.dedup();
        assert_eq!(got.len(), 3); // all three reflections of A2
        for (_, t) in &line {
            assert!(t.is_reflection());
        }
        // Periodicity: ρ has order 3.
        let wide = dihedral_reflection_line(&s1, &s2, 0..=3).unwrap();
        assert_eq!(wide[3].1, wide[0].1);

        // Infinite dihedral: five distinct entries for k in −2..=2.
        let inf = CoxeterSystem::dihedral(None);
        let t1 = inf.generator(0).unwrap();
        let t2 = inf.generator(1).unwrap();
        let line = dihedral_reflection_line(&t1, &t2, -2..=2).unwrap();
        let mut distinct = line.iter().map(|(_, t)| t.clone()).collect::<Vec<_>>();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 5);

        // Bad inputs.
        assert!(dihedral_reflection_line(&s1, &s1, 0..=1).is_err());
        let rot = a2.element_from_word(&[0, 1]).unwrap();
        assert!(dihedral_reflection_line(&s1, &rot, 0..=1).is_err());
    }
}
