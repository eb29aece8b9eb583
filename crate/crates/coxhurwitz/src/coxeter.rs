//! Coxeter systems in the standard geometric representation.
//!
//! A system is built from a Coxeter matrix; elements are exact matrices over
//! the cyclotomic field chosen from the matrix entries (see [`crate::scalar`]).
//! The matrix is the source of truth for identity and equality; reduced words
//! are derived on demand and cached.
//!
//! Canonical words are ShortLex-minimal: the word is produced greedily by
//! choosing the smallest left descent at each step, which is implemented as
//! the right-descent recursion on the inverse (the smallest generator `s`
//! with `w⁻¹(α_s)` negative, replacing `w⁻¹` by `w⁻¹s`).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::sync::{Arc, OnceLock};

use crate::scalar::{CycField, Scalar, Sign};
use crate::{Error, Result};

/// A word in generator indices (0-based).
pub type Word = Vec<usize>;

/// Entry m_st of a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxEntry {
    Finite(u32),
    Infinite,
}

impl CoxEntry {
    pub fn as_option(self) -> Option<u32> {
        match self {
            CoxEntry::Finite(m) => Some(m),
            CoxEntry::Infinite => None,
        }
    }
}

impl fmt::Display for CoxEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxEntry::Finite(m) => write!(f, "{m}"),
            CoxEntry::Infinite => write!(f, "inf"),
        }
    }
}

/// Sign class of a root: every root of the representation is positive or
/// negative coordinatewise; mixed signs cannot arise from group operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSign {
    Positive,
    Negative,
}

/// A vector in the root space, in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root(pub Vec<Scalar>);

impl Root {
    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    /// Coordinatewise sign dichotomy.
    pub fn sign(&self) -> Result<RootSign> {
        let mut pos = false;
        let mut neg = false;
        for c in &self.0 {
            match c.sign() {
                Sign::Positive => pos = true,
                Sign::Negative => neg = true,
                Sign::Zero => {}
            }
        }
        match (pos, neg) {
            (true, false) => Ok(RootSign::Positive),
            (false, true) => Ok(RootSign::Negative),
            _ => Err(Error::Internal(
                "mixed-sign or zero coordinate vector is not a root".into(),
            )),
        }
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root{:?}", self.0)
    }
}

// ---------------------------------------------------------------------------
// Exact matrices.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Mat {
    pub n: usize,
    pub a: Vec<Scalar>, // row-major
}

impl Mat {
    pub fn identity(f: &Arc<CycField>, n: usize) -> Mat {
        let mut a = vec![Scalar::zero(f); n * n];
        for i in 0..n {
            a[i * n + i] = Scalar::one(f);
        }
        Mat { n, a }
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.a[i * self.n + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.n).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let f = self.a[0].field();
        let mut out = vec![Scalar::zero(f); n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.at(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out[i * n + j] += &(aik * b);
                }
            }
        }
        Mat { n, a: out }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let f = self.a[0].field();
        let mut out = vec![Scalar::zero(f); n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.at(i, k);
                if aik.is_zero() || v[k].is_zero() {
                    continue;
                }
                out[i] += &(aik * &v[k]);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.at(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact inverse by Gauss–Jordan elimination (pivot = first nonzero,
    /// decided by exact coefficient equality).  Panics on singular input,
    /// which cannot occur for group elements.
    pub fn inverse(&self) -> Mat {
        let n = self.n;
        let f = self.a[0].field();
        let mut a = self.clone();
        let mut inv = Mat::identity(f, n);
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .expect("singular matrix for a group element");
            if piv != col {
                for j in 0..n {
                    a.a.swap(col * n + j, piv * n + j);
                    inv.a.swap(col * n + j, piv * n + j);
                }
            }
            let pinv = a.at(col, col).inverse().expect("nonzero pivot");
            for j in 0..n {
                let x = a.at(col, j) * &pinv;
                a.set(col, j, x);
                let y = inv.at(col, j) * &pinv;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let x = a.at(r, j) - &(&factor * a.at(col, j));
                    a.set(r, j, x);
                    let y = inv.at(r, j) - &(&factor * inv.at(col, j));
                    inv.set(r, j, y);
                }
            }
        }
        inv
    }
}

// ---------------------------------------------------------------------------
// Systems.
// ---------------------------------------------------------------------------

pub(crate) struct GroupEnum {
    /// All elements in BFS order (by length, then ShortLex within a length).
    pub elements: Vec<Element>,
}

struct SysInner {
    rank: usize,
    matrix: Vec<Vec<CoxEntry>>,
    field: Arc<CycField>,
    bilinear: Mat,
    /// 2·B(s,t), used by the fast one-generator multiplication updates.
    two_b: Mat,
    gens: Vec<Mat>,
    group: OnceLock<GroupEnum>,
    /// Caches owned by `reflect`: full reflection list and ℓ_T BFS distances.
    reflections: OnceLock<Vec<Element>>,
    refl_dist: OnceLock<HashMap<Element, usize>>,
}

/// A Coxeter system (W, S) of finite rank.  Cheap to clone (shared).
#[derive(Clone)]
pub struct CoxeterSystem {
    inner: Arc<SysInner>,
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.matrix == other.inner.matrix
    }
}

impl Eq for CoxeterSystem {}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterSystem(rank={})", self.inner.rank)
    }
}

impl CoxeterSystem {
    /// Build a system from a full Coxeter matrix: symmetric, 1 on the
    /// diagonal, off-diagonal entries ≥ 2 or ∞.
    pub fn from_matrix(matrix: Vec<Vec<CoxEntry>>) -> Result<CoxeterSystem> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(Error::InvalidMatrix("rank must be at least 1".into()));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has length {}, expected {rank}",
                    i + 1,
                    row.len()
                )));
            }
            if row[i] != CoxEntry::Finite(1) {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry m_{{{0},{0}}} must be 1",
                    i + 1
                )));
            }
            for j in 0..rank {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::InvalidMatrix(format!(
                        "matrix is not symmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
                if i != j {
                    if let CoxEntry::Finite(m) = matrix[i][j] {
                        if m < 2 {
                            return Err(Error::InvalidMatrix(format!(
                                "off-diagonal entry m_{{{},{}}} = {m} must be ≥ 2",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
            }
        }

        // Coefficient field: plain rationals when every finite off-diagonal
        // entry is 2 or 3 (their cosines are rational); otherwise the
        // cyclotomic field of level L = lcm of all finite entries.
        let mut l: u64 = 1;
        let mut needs_cyclotomic = false;
        for i in 0..rank {
            for j in (i + 1)..rank {
                if let CoxEntry::Finite(m) = matrix[i][j] {
                    l = num_integer::lcm(l, m as u64);
                    if m > 3 {
                        needs_cyclotomic = true;
                    }
                }
            }
        }
        let field = CycField::new(if needs_cyclotomic { l } else { 1 });

        let mut bilinear = Mat::identity(&field, rank);
        for i in 0..rank {
            for j in 0..rank {
                if i != j {
                    let v = Scalar::neg_cos(&field, matrix[i][j].as_option())?;
                    bilinear.set(i, j, v);
                }
            }
        }
        let two = Scalar::from_int(&field, 2);
        let mut two_b = bilinear.clone();
        for v in two_b.a.iter_mut() {
            *v = &*v * &two;
        }

        // σ_s(α_t) = α_t − 2B(s,t)·α_s, i.e. (σ_s)_{i,t} = δ_{i,t} − 2B(s,t)·δ_{i,s}.
        let mut gens = Vec::with_capacity(rank);
        for s in 0..rank {
            let mut g = Mat::identity(&field, rank);
            for t in 0..rank {
                let x = g.at(s, t) - two_b.at(s, t);
                g.set(s, t, x);
            }
            gens.push(g);
        }

        Ok(CoxeterSystem {
            inner: Arc::new(SysInner {
                rank,
                matrix,
                field,
                bilinear,
                two_b,
                gens,
                group: OnceLock::new(),
                reflections: OnceLock::new(),
                refl_dist: OnceLock::new(),
            }),
        })
    }

    /// Convenience constructor: rank and off-diagonal entries as (i, j, m)
    /// triples (0-based, i ≠ j); unlisted pairs default to 2.
    pub fn from_links(rank: usize, links: &[(usize, usize, CoxEntry)]) -> Result<CoxeterSystem> {
        let mut matrix = vec![vec![CoxEntry::Finite(2); rank]; rank];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = CoxEntry::Finite(1);
        }
        for &(i, j, m) in links {
            if i >= rank || j >= rank || i == j {
                return Err(Error::InvalidMatrix(format!("bad link ({i},{j})")));
            }
            matrix[i][j] = m;
            matrix[j][i] = m;
        }
        CoxeterSystem::from_matrix(matrix)
    }

    /// The dihedral system I2(m); `None` is the infinite dihedral group.
    pub fn dihedral(m: Option<u32>) -> CoxeterSystem {
        let entry = match m {
            Some(m) => CoxEntry::Finite(m),
            None => CoxEntry::Infinite,
        };
        CoxeterSystem::from_links(2, &[(0, 1, entry)]).expect("valid dihedral matrix")
    }

    /// Type A_n: the line with consecutive entries 3.
    pub fn type_a(n: usize) -> CoxeterSystem {
        let links: Vec<_> = (0..n.saturating_sub(1))
            .map(|i| (i, i + 1, CoxEntry::Finite(3)))
            .collect();
        CoxeterSystem::from_links(n, &links).expect("valid A_n matrix")
    }

    pub fn rank(&self) -> usize {
        self.inner.rank
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.inner.field
    }

    pub fn entry(&self, i: usize, j: usize) -> CoxEntry {
        self.inner.matrix[i][j]
    }

    pub fn coxeter_matrix(&self) -> &Vec<Vec<CoxEntry>> {
        &self.inner.matrix
    }

    pub fn identity(&self) -> Element {
        let e = Element::from_mat(self, Mat::identity(&self.inner.field, self.inner.rank));
        e.inner.word.set(Vec::new()).ok();
        e
    }

    pub fn generator(&self, s: usize) -> Result<Element> {
        if s >= self.inner.rank {
            return Err(Error::GeneratorOutOfRange { index: s, rank: self.inner.rank });
        }
        let e = Element::from_mat(self, self.inner.gens[s].clone());
        e.inner.word.set(vec![s]).ok();
        Ok(e)
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.inner.rank).map(|s| self.generator(s).unwrap()).collect()
    }

    pub fn element_from_word(&self, word: &[usize]) -> Result<Element> {
        let mut m = Mat::identity(&self.inner.field, self.inner.rank);
        for &s in word {
            if s >= self.inner.rank {
                return Err(Error::GeneratorOutOfRange { index: s, rank: self.inner.rank });
            }
            m = self.mul_gen_right(&m, s);
        }
        Ok(Element::from_mat(self, m))
    }

    pub fn simple_root(&self, s: usize) -> Result<Root> {
        if s >= self.inner.rank {
            return Err(Error::GeneratorOutOfRange { index: s, rank: self.inner.rank });
        }
        let mut v = vec![Scalar::zero(&self.inner.field); self.inner.rank];
        v[s] = Scalar::one(&self.inner.field);
        Ok(Root(v))
    }

    /// The symmetric bilinear form B on root coordinates.
    pub fn bilinear(&self, a: &Root, b: &Root) -> Scalar {
        let bv = self.inner.bilinear.mul_vec(&b.0);
        let mut acc = Scalar::zero(&self.inner.field);
        for (x, y) in a.0.iter().zip(&bv) {
            if !x.is_zero() && !y.is_zero() {
                acc += &(x * y);
            }
        }
        acc
    }

    pub fn bilinear_entry(&self, s: usize, t: usize) -> &Scalar {
        self.inner.bilinear.at(s, t)
    }

    /// Right multiplication by σ_s via column updates:
    /// col_t(M·σ_s) = col_t(M) − 2B(s,t)·col_s(M).
    fn mul_gen_right(&self, m: &Mat, s: usize) -> Mat {
        let n = m.n;
        let cs = m.col(s);
        let mut out = m.clone();
        for t in 0..n {
            let coef = self.inner.two_b.at(s, t);
            if coef.is_zero() {
                continue;
            }
            for i in 0..n {
                if cs[i].is_zero() {
                    continue;
                }
                let x = out.at(i, t) - &(coef * &cs[i]);
                out.set(i, t, x);
            }
        }
        out
    }

    /// Left multiplication by σ_s: only row s changes,
    /// row_s(σ_s·M) = row_s(M) − Σ_k 2B(s,k)·row_k(M).
    fn mul_gen_left(&self, m: &Mat, s: usize) -> Mat {
        let n = m.n;
        let mut out = m.clone();
        for k in 0..n {
            let coef = self.inner.two_b.at(s, k);
            if coef.is_zero() {
                continue;
            }
            for j in 0..n {
                let mk = m.at(k, j);
                if mk.is_zero() {
                    continue;
                }
                let x = out.at(s, j) - &(coef * mk);
                out.set(s, j, x);
            }
        }
        out
    }

    /// BFS enumeration of W by right multiplication, up to `budget` elements.
    /// Fails if the group has more than `budget` elements (e.g. is infinite).
    /// The result is cached; the cached copy is returned on later calls
    /// regardless of the budget.
    pub(crate) fn group_enum(&self, budget: usize) -> Result<&GroupEnum> {
        if let Some(g) = self.inner.group.get() {
            return Ok(g);
        }
        let id = self.identity();
        let mut elements = vec![id.clone()];
        let mut seen = HashSet::from([id]);
        let mut qi = 0;
        while qi < elements.len() {
            let u = elements[qi].clone();
            qi += 1;
            for s in 0..self.inner.rank {
                let v = u.mul_gen(s);
                if seen.contains(&v) {
                    continue;
                }
                if elements.len() >= budget {
                    return Err(Error::EnumerationBudgetExceeded { budget });
                }
                // BFS discovers each element first through its ShortLex word
                // (canonical words are prefix-closed), so seed the cache.
                let mut w = u.canonical_word().to_vec();
                w.push(s);
                v.inner.word.set(w).ok();
                seen.insert(v.clone());
                elements.push(v);
            }
        }
        Ok(self.inner.group.get_or_init(|| GroupEnum { elements }))
    }

    /// All elements of a finite W, ordered by length then ShortLex.
    pub fn enumerate_elements(&self, budget: usize) -> Result<Vec<Element>> {
        Ok(self.group_enum(budget)?.elements.clone())
    }

    /// The order of W, when it does not exceed `budget`.
    pub fn group_order(&self, budget: usize) -> Result<usize> {
        Ok(self.group_enum(budget)?.elements.len())
    }

    pub(crate) fn reflections_cache(&self) -> &OnceLock<Vec<Element>> {
        &self.inner.reflections
    }

    pub(crate) fn refl_dist_cache(&self) -> &OnceLock<HashMap<Element, usize>> {
        &self.inner.refl_dist
    }
}

// ---------------------------------------------------------------------------
// Elements.
// ---------------------------------------------------------------------------

struct ElemInner {
    mat: Mat,
    /// ShortLex-minimal reduced word, filled on demand (idempotent).
    word: OnceLock<Word>,
}

/// An element of W: an exact matrix plus a lazily cached canonical word.
/// Cheap to clone.
#[derive(Clone)]
pub struct Element {
    sys: CoxeterSystem,
    inner: Arc<ElemInner>,
}

impl Element {
    fn from_mat(sys: &CoxeterSystem, mat: Mat) -> Element {
        Element {
            sys: sys.clone(),
            inner: Arc::new(ElemInner { mat, word: OnceLock::new() }),
        }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn is_identity(&self) -> bool {
        self.inner.mat.is_identity()
    }

    pub fn same_system(&self, other: &Element) -> bool {
        self.sys == other.sys
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        if !self.same_system(other) {
            return Err(Error::SystemMismatch);
        }
        Ok(self * other)
    }

    pub fn inverse(&self) -> Element {
        Element::from_mat(&self.sys, self.inner.mat.inverse())
    }

    /// Right multiplication by a generator (fast column update).
    pub fn mul_gen(&self, s: usize) -> Element {
        Element::from_mat(&self.sys, self.sys.mul_gen_right(&self.inner.mat, s))
    }

    /// Left multiplication by a generator (fast row update).
    pub fn gen_mul(&self, s: usize) -> Element {
        Element::from_mat(&self.sys, self.sys.mul_gen_left(&self.inner.mat, s))
    }

    pub fn apply_to_root(&self, r: &Root) -> Root {
        Root(self.inner.mat.mul_vec(&r.0))
    }

    /// Image of the simple root α_s, read off as matrix column s.
    fn image_of_simple(&self, s: usize) -> Root {
        Root(self.inner.mat.col(s))
    }

    /// Right descent: ℓ(ws) < ℓ(w) iff w(α_s) is a negative root.
    pub fn has_right_descent(&self, s: usize) -> bool {
        matches!(
            self.image_of_simple(s).sign().expect("group image of a simple root"),
            RootSign::Negative
        )
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.sys.rank()).filter(|&s| self.has_right_descent(s)).collect()
    }

    pub fn has_left_descent(&self, s: usize) -> bool {
        self.inverse().has_right_descent(s)
    }

    /// ShortLex-minimal reduced word (cached).
    pub fn canonical_word(&self) -> &Word {
        self.inner.word.get_or_init(|| {
            let mut v = self.inner.mat.inverse();
            let mut word = Word::new();
            'outer: loop {
                for s in 0..self.sys.rank() {
                    let col = Root(v.col(s));
                    if matches!(col.sign().expect("root dichotomy"), RootSign::Negative) {
                        word.push(s);
                        v = self.sys.mul_gen_right(&v, s);
                        continue 'outer;
                    }
                }
                debug_assert!(v.is_identity());
                return word;
            }
        })
    }

    pub fn length(&self) -> usize {
        self.canonical_word().len()
    }

    /// Multiplicative order, if it is at most `cap`.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }

    /// Integer power (negative exponents via the inverse).
    pub fn pow(&self, k: i64) -> Element {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = self.sys.identity();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Reflection test: w ≠ e, w² = e, odd length, and w is conjugate to a
    /// simple reflection by iterated descent conjugation.  Equivalently, the
    /// (−1)-eigenspace is spanned by a root.
    pub fn is_reflection(&self) -> bool {
        self.reflection_root_opt().is_some()
    }

    /// The positive root α with w = s_α.
    pub fn reflection_root(&self) -> Result<Root> {
        self.reflection_root_opt().ok_or(Error::NotAReflection)
    }

    fn reflection_root_opt(&self) -> Option<Root> {
        if self.length() % 2 == 0 {
            return None; // includes the identity
        }
        if !(self * self).is_identity() {
            return None;
        }
        let root = self.descent_conjugation_root()?;
        debug_assert_eq!(self.apply_to_root(&root), root.negated());
        debug_assert!(self.sys.bilinear(&root, &root).is_one());
        Some(root)
    }

    /// For an involution w of odd length: find a descent s with
    /// ℓ(sws) = ℓ(w) − 2 and recurse; reaching length 1 identifies w as
    /// u·s·u⁻¹ and produces its root.  A genuine reflection always admits such
    /// a descent; a stuck recursion proves w is not a reflection.
    fn descent_conjugation_root(&self) -> Option<Root> {
        let len = self.length();
        if len == 1 {
            let s = self.canonical_word()[0];
            return Some(self.sys.simple_root(s).unwrap());
        }
        for s in self.right_descents() {
            let conj = self.gen_mul(s).mul_gen(s);
            if conj.length() == len - 2 {
                let inner_root = conj.descent_conjugation_root()?;
                let gen = self.sys.generator(s).unwrap();
                let img = gen.apply_to_root(&inner_root);
                return match img.sign().expect("root dichotomy") {
                    RootSign::Positive => Some(img),
                    RootSign::Negative => Some(img.negated()),
                };
            }
        }
        None
    }

    /// All reduced words, by recursion over left descents.  Exponential in
    /// general; intended for small finite groups.
    pub fn reduced_words(&self) -> Vec<Word> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let inv = self.inverse();
        let mut out = Vec::new();
        for s in 0..self.sys.rank() {
            // s is a left descent of w iff it is a right descent of w⁻¹.
            if inv.has_right_descent(s) {
                let rest = self.gen_mul(s);
                for mut w in rest.reduced_words() {
                    w.insert(0, s);
                    out.push(w);
                }
            }
        }
        out
    }

    /// Sort key: (length, canonical word) — the ShortLex order on W.
    pub fn shortlex_key(&self) -> (usize, Word) {
        (self.length(), self.canonical_word().clone())
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.same_system(other), "comparing elements of different systems");
        self.inner.mat == other.inner.mat
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.mat.hash(state);
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.canonical_word().cmp(other.canonical_word()))
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        assert!(self.same_system(rhs), "elements of different Coxeter systems");
        Element::from_mat(&self.sys, self.inner.mat.mul(&rhs.inner.mat))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Element {
    /// Canonical word with 1-based generator indices; the identity prints "e".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.canonical_word();
        if w.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = w.iter().map(|s| (s + 1).to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}
