//! The Hurwitz action of the braid group B_n on n-tuples of reflections:
//! σ_i replaces (t_i, t_{i+1}) by (t_i t_{i+1} t_i, t_i), preserving the
//! product.  Orbit enumeration, the valley-straightening algorithm with braid
//! witnesses, and the synthesis of a braid carrying a reduced factorization
//! of a Coxeter element to its defining tuple of simple reflections.
//!
//! Convention: a braid word is written σ_{a_1}…σ_{a_k} in notation order and
//! acts with the RIGHTMOST letter applied first (function composition).
//! Printed form lists letters in application order instead.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bruhat::{classify_shape, is_reduced_factorization_with, path_of_factorization, Shape};
use crate::coxeter::{CoxeterSystem, Element, Word};
use crate::reflect::DEFAULT_WORD_BUDGET;
use crate::{Error, Result};

/// A tuple of reflections together with its cached product.
#[derive(Clone)]
pub struct Factorization {
    sys: CoxeterSystem,
    steps: Vec<Element>,
    product: Element,
}

impl Factorization {
    pub fn new(sys: &CoxeterSystem, steps: Vec<Element>) -> Result<Factorization> {
        let mut product = sys.identity();
        for t in &steps {
            if t.system() != sys {
                return Err(Error::SystemMismatch);
            }
            if !t.is_reflection() {
                return Err(Error::NotAReflection);
            }
            product = &product * t;
        }
        Ok(Factorization { sys: sys.clone(), steps, product })
    }

    pub fn from_words(sys: &CoxeterSystem, words: &[Word]) -> Result<Factorization> {
        let steps = words
            .iter()
            .map(|w| sys.element_from_word(w))
            .collect::<Result<Vec<_>>>()?;
        Factorization::new(sys, steps)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn steps(&self) -> &[Element] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn product(&self) -> &Element {
        &self.product
    }
}

impl PartialEq for Factorization {
    fn eq(&self, other: &Self) -> bool {
        self.steps == other.steps
    }
}

impl Eq for Factorization {}

impl Hash for Factorization {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.steps.hash(state);
    }
}

impl PartialOrd for Factorization {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Factorization {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.steps.cmp(&other.steps)
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Factorization {
    /// Factors as 1-based words joined by " ; ".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" ; "))
    }
}

/// One braid generator σ_{index+1} or its inverse (index is 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    fn cancels(&self, other: &BraidLetter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

/// A word in the braid generators, stored in notation order (leftmost letter
/// applied last).  Adjacent σ_iσ_i⁻¹ pairs are cancelled on construction; no
/// further normalization is performed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity() -> BraidWord {
        BraidWord::default()
    }

    pub fn from_notation_order(letters: Vec<BraidLetter>) -> BraidWord {
        let mut app: Vec<BraidLetter> = letters.into_iter().rev().collect();
        app = cancel_adjacent(app);
        app.reverse();
        BraidWord { letters: app }
    }

    pub fn from_application_order(letters: Vec<BraidLetter>) -> BraidWord {
        let mut app = cancel_adjacent(letters);
        app.reverse();
        BraidWord { letters: app }
    }

    /// Letters in notation order.
    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    /// Letters in the order they are applied.
    pub fn application_order(&self) -> impl DoubleEndedIterator<Item = &BraidLetter> {
        self.letters.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word applying `self` first and `later` second.
    pub fn then(&self, later: &BraidWord) -> BraidWord {
        let app: Vec<BraidLetter> = self
            .application_order()
            .chain(later.application_order())
            .copied()
            .collect();
        BraidWord::from_application_order(app)
    }

    pub fn inverse(&self) -> BraidWord {
        let app: Vec<BraidLetter> = self
            .letters
            .iter()
            .map(|l| BraidLetter { index: l.index, inverse: !l.inverse })
            .collect();
        BraidWord::from_application_order(app)
    }
}

fn cancel_adjacent(letters: Vec<BraidLetter>) -> Vec<BraidLetter> {
    let mut stack: Vec<BraidLetter> = Vec::with_capacity(letters.len());
    for l in letters {
        if stack.last().is_some_and(|top| top.cancels(&l)) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack
}

impl fmt::Display for BraidWord {
    /// Application order, 1-based, sign for inversion: "2 -1" is σ2 then σ1⁻¹.
    /// The empty word prints "e".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .application_order()
            .map(|l| {
                let i = (l.index + 1) as i64;
                (if l.inverse { -i } else { i }).to_string()
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// σ_i^{±1} acting at positions (i, i+1), 0-based.
pub fn apply_sigma(f: &Factorization, i: usize, inverse: bool) -> Result<Factorization> {
    let n = f.len();
    if n < 2 || i >= n - 1 {
        return Err(Error::GeneratorOutOfRange { index: i, rank: n.saturating_sub(1) });
    }
    let mut steps = f.steps.clone();
    let (a, b) = (steps[i].clone(), steps[i + 1].clone());
    if inverse {
        steps[i] = b.clone();
        steps[i + 1] = &(&b * &a) * &b;
    } else {
        steps[i] = &(&a * &b) * &a;
        steps[i + 1] = a;
    }
    let out = Factorization { sys: f.sys.clone(), steps, product: f.product.clone() };
    debug_assert_eq!(
        out.steps.iter().fold(f.sys.identity(), |acc, t| &acc * t),
        f.product
    );
    Ok(out)
}

/// Apply a braid word, rightmost letter first.
pub fn apply_braid(f: &Factorization, b: &BraidWord) -> Result<Factorization> {
    let mut cur = f.clone();
    for l in b.application_order() {
        cur = apply_sigma(&cur, l.index, l.inverse)?;
    }
    Ok(cur)
}

/// BFS closure of a tuple under all σ_i^{±1}, sorted; if the orbit exceeds
/// `budget`, the error carries the tuples found so far.
pub fn hurwitz_orbit(f: &Factorization, budget: usize) -> Result<Vec<Factorization>> {
    if budget < 1 {
        return Err(Error::Contract("orbit budget must be at least 1".into()));
    }
    let mut seen: HashSet<Factorization> = HashSet::new();
    seen.insert(f.clone());
    let mut out = vec![f.clone()];
    let mut queue = VecDeque::new();
    queue.push_back(f.clone());
    while let Some(g) = queue.pop_front() {
        for i in 0..g.len().saturating_sub(1) {
            for inverse in [false, true] {
                let h = apply_sigma(&g, i, inverse)?;
                if seen.contains(&h) {
                    continue;
                }
                if out.len() >= budget {
                    out.sort();
                    return Err(Error::OrbitBudgetExceeded { budget, partial: out });
                }
                seen.insert(h.clone());
                out.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Given an up-down pattern z → zt₁ ← zt₁t₂, find (t₁', t₂') in the dihedral
/// group ⟨t₁, t₂⟩ with t₁'t₂' = t₁t₂ and ℓ(zt₁') < max(ℓ(z), ℓ(zt₁t₂)), i.e.
/// the peak strictly drops.  Returns the pair together with the signed power
/// k such that σ₁^k carries (t₁, t₂) to (t₁', t₂').
///
/// Candidates are σ₁^k(t₁, t₂) = (ρ^k t₁, ρ^k t₂) with ρ = t₁t₂, searched
/// outward in the order k = 0, −1, +1, −2, +2, …; the first pair satisfying
/// the drop wins.
pub fn resolve_descent(
    z: &Element,
    t1: &Element,
    t2: &Element,
) -> Result<(Element, Element, i64)> {
    if z.system() != t1.system() || z.system() != t2.system() {
        return Err(Error::SystemMismatch);
    }
    if !t1.is_reflection() || !t2.is_reflection() {
        return Err(Error::NotAReflection);
    }
    if t1 == t2 {
        return Err(Error::Contract("descent resolution needs distinct reflections".into()));
    }
    let zt1 = z * t1;
    let zt1t2 = &zt1 * t2;
    let (lz, lp, le) = (z.length(), zt1.length(), zt1t2.length());
    if !(lz < lp && le < lp) {
        return Err(Error::Contract(
            "descent resolution requires an up-down pattern at z".into(),
        ));
    }
    let bound = lz.max(le);

    let rho = t1 * t2;
    let rho_inv = rho.inverse();
    let accept = |pair: &(Element, Element)| (z * &pair.0).length() < bound;
    let finish = |pair: &(Element, Element), k: i64| {
        debug_assert_eq!(&pair.0 * &pair.1, rho);
        debug_assert!(pair.0.is_reflection() && pair.1.is_reflection());
        Ok((pair.0.clone(), pair.1.clone(), k))
    };
    // Walk both directions of the line incrementally.  A repeated pair means
    // the (periodic) line has been fully examined without a hit, which a
    // valley shape forbids; the cap is a defensive bound for the aperiodic
    // case.
    let mut seen: HashSet<(Element, Element)> = HashSet::new();
    let mut pos = (t1.clone(), t2.clone());
    seen.insert(pos.clone());
    if accept(&pos) {
        return finish(&pos, 0);
    }
    let mut neg = pos.clone();
    let cap = 64.max(lz + lp + le + 8) as i64;
    for step in 1..=cap {
        neg = (&rho_inv * &neg.0, &rho_inv * &neg.1);
        if !seen.insert(neg.clone()) {
            return Err(Error::Internal(
                "no valley-compatible pair on the dihedral line".into(),
            ));
        }
        if accept(&neg) {
            return finish(&neg, -step);
        }
        pos = (&rho * &pos.0, &rho * &pos.1);
        if !seen.insert(pos.clone()) {
            return Err(Error::Internal(
                "no valley-compatible pair on the dihedral line".into(),
            ));
        }
        if accept(&pos) {
            return finish(&pos, step);
        }
    }
    Err(Error::Internal(
        "dihedral line search exceeded its cap without a valley-compatible pair".into(),
    ))
}

/// Straighten a reduced factorization relative to a start vertex x: produce a
/// tuple in the same Hurwitz orbit whose path from x is a valley (strictly
/// down `pivot` steps, then strictly up), together with the braid witness
/// that realizes it.  The witness is re-applied to `f` and verified before
/// returning.  With x = e the pivot is always 0.
pub fn straighten(f: &Factorization, x: &Element) -> Result<(Factorization, BraidWord, usize)> {
    straighten_with(f, x, DEFAULT_WORD_BUDGET)
}

pub fn straighten_with(
    f: &Factorization,
    x: &Element,
    word_budget: usize,
) -> Result<(Factorization, BraidWord, usize)> {
    if x.system() != f.system() {
        return Err(Error::SystemMismatch);
    }
    if !is_reduced_factorization_with(f.steps(), word_budget)? {
        return Err(Error::Contract("factorization is not reduced".into()));
    }
    let n = f.len();
    let mut steps = f.steps().to_vec();
    let mut witness_app: Vec<BraidLetter> = Vec::new();
    loop {
        let mut verts = Vec::with_capacity(n + 1);
        verts.push(x.clone());
        for t in &steps {
            let next = verts.last().unwrap() * t;
            verts.push(next);
        }
        let lens: Vec<usize> = verts.iter().map(|v| v.length()).collect();
        // Leftmost peak: up into vertex p, down out of it.
        let Some(p) = (1..n).find(|&p| lens[p - 1] < lens[p] && lens[p + 1] < lens[p]) else {
            break;
        };
        let (t1, t2, k) = resolve_descent(&verts[p - 1], &steps[p - 1], &steps[p])?;
        steps[p - 1] = t1;
        steps[p] = t2;
        let letter = BraidLetter { index: p - 1, inverse: k < 0 };
        witness_app.extend(std::iter::repeat(letter).take(k.unsigned_abs() as usize));
    }
    let g = Factorization::new(f.system(), steps)?;
    let path = path_of_factorization(x, g.steps())?;
    let Shape::Valley { pivot } = classify_shape(&path) else {
        return Err(Error::Internal("straightened path is not a valley".into()));
    };
    let witness = BraidWord::from_application_order(witness_app);
    if apply_braid(f, &witness)? != g {
        return Err(Error::Internal("straightening witness failed verification".into()));
    }
    if x.is_identity() {
        debug_assert_eq!(pivot, 0, "no edge can descend from the identity");
    }
    Ok((g, witness, pivot))
}

/// The permutation [π_1, …, π_n] (1-based values) recording the insertion
/// order of the letters of a fixed reduced word along a directed path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionPermutation {
    values: Vec<usize>,
}

impl InsertionPermutation {
    pub fn new(values: Vec<usize>) -> Result<InsertionPermutation> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::Contract(format!(
                    "[{values:?}] is not a permutation of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(InsertionPermutation { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

impl fmt::Display for InsertionPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// For a directed-path factorization f of c = s_{w_1}⋯s_{w_n} (distinct
/// letters, ℓ(c) = n): π_i is the unique j such that the prefix t_1⋯t_i
/// equals the order-preserving subword of c on the letter positions
/// {π_1,…,π_{i−1}, j}.
pub fn extract_insertion_permutation(
    f: &Factorization,
    c_word: &[usize],
) -> Result<InsertionPermutation> {
    let sys = f.system();
    let n = f.len();
    if c_word.len() != n {
        return Err(Error::Contract(
            "target word length differs from the tuple arity".into(),
        ));
    }
    let mut letters = HashSet::new();
    for &s in c_word {
        if !letters.insert(s) {
            return Err(Error::Contract("target word letters must be distinct".into()));
        }
    }
    let c = sys.element_from_word(c_word)?;
    if &c != f.product() {
        return Err(Error::Contract(
            "factorization does not multiply to the target word".into(),
        ));
    }
    if c.length() != n {
        return Err(Error::Contract("target word is not reduced".into()));
    }
    let path = path_of_factorization(&sys.identity(), f.steps())?;
    if classify_shape(&path) != (Shape::Valley { pivot: 0 }) {
        return Err(Error::Contract(
            "path from the identity is not directed; straighten first".into(),
        ));
    }

    let mut used: Vec<usize> = Vec::new(); // 1-based positions into c_word
    let mut values = Vec::with_capacity(n);
    let mut prefix = sys.identity();
    for t in f.steps() {
        prefix = &prefix * t;
        let mut found = None;
        for j in 1..=n {
            if used.contains(&j) {
                continue;
            }
            let mut pos: Vec<usize> = used.iter().copied().chain([j]).collect();
            pos.sort_unstable();
            let word: Vec<usize> = pos.iter().map(|&p| c_word[p - 1]).collect();
            if sys.element_from_word(&word)? == prefix {
                if found.is_some() {
                    return Err(Error::Contract(
                        "insertion position is not unique".into(),
                    ));
                }
                found = Some(j);
            }
        }
        let Some(j) = found else {
            return Err(Error::Contract(
                "prefix is not a subword of the target word".into(),
            ));
        };
        used.push(j);
        values.push(j);
    }
    InsertionPermutation::new(values)
}

/// Embed a permutation into B_n by sorting with adjacent transpositions:
/// repeatedly take the smallest i with π_i > π_{i+1}, emit σ_i, and swap.
/// Applying the result to a factorization with insertion permutation π yields
/// the factorization with the identity permutation, i.e. (s_{w_1},…,s_{w_n}).
pub fn permutation_to_braid(pi: &InsertionPermutation) -> BraidWord {
    let mut v = pi.values().to_vec();
    let mut app = Vec::new();
    loop {
        let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) else {
            break;
        };
        app.push(BraidLetter { index: i, inverse: false });
        v.swap(i, i + 1);
    }
    BraidWord::from_application_order(app)
}

/// A braid word carrying the reduced factorization f of c = s_{w_1}⋯s_{w_n}
/// to the tuple of simple reflections (s_{w_1},…,s_{w_n}): straighten to a
/// directed path, then sort the insertion permutation.  The result is
/// verified by application before it is returned.
pub fn transitivity_braid(f: &Factorization, c_word: &[usize]) -> Result<BraidWord> {
    transitivity_braid_with(f, c_word, DEFAULT_WORD_BUDGET)
}

pub fn transitivity_braid_with(
    f: &Factorization,
    c_word: &[usize],
    word_budget: usize,
) -> Result<BraidWord> {
    let sys = f.system();
    let (g, w1, _) = straighten_with(f, &sys.identity(), word_budget)?;
    let pi = extract_insertion_permutation(&g, c_word)?;
    let b = w1.then(&permutation_to_braid(&pi));
    let target_steps = c_word
        .iter()
        .map(|&s| sys.generator(s))
        .collect::<Result<Vec<_>>>()?;
    let target = Factorization::new(sys, target_steps)?;
    if apply_braid(f, &b)? != target {
        return Err(Error::Internal(
            "transitivity braid failed verification".into(),
        ));
    }
    Ok(b)
}
