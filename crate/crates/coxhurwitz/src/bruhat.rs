//! The Bruhat graph Ω on W (edges w — wt for reflections t) and its
//! orientation Ω_dir toward greater length; factorizations as paths; valley
//! classification; restriction to reflection subgroups.
//!
//! Graphs are only ever materialized as balls of finite radius or on finite
//! (sub)groups; the infinite graph is never represented globally.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::coxeter::{CoxeterSystem, Element};
use crate::reflect::{
    self, enumerate_reflections, reflection_length_with, ReflectionSet, ReflectionSubgroup,
    DEFAULT_WORD_BUDGET,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Shape of a path's direction pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Strictly decreasing for `pivot` steps, then strictly increasing.
    Valley { pivot: usize },
    NotValley,
}

/// The path x → xt_1 → xt_1t_2 → … determined by a start vertex and a tuple
/// of reflection steps.
pub struct BruhatPath {
    start: Element,
    steps: Vec<Element>,
    vertices: Vec<Element>,
    pattern: Vec<Direction>,
}

impl BruhatPath {
    pub fn start(&self) -> &Element {
        &self.start
    }

    pub fn steps(&self) -> &[Element] {
        &self.steps
    }

    /// n+1 vertices for n steps.
    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    pub fn pattern(&self) -> &[Direction] {
        &self.pattern
    }

    pub fn endpoint(&self) -> &Element {
        self.vertices.last().expect("paths have at least one vertex")
    }
}

/// Walk the factorization from `x`; lengths across an edge always differ
/// (multiplication by a reflection flips length parity).
pub fn path_of_factorization(x: &Element, steps: &[Element]) -> Result<BruhatPath> {
    let mut vertices = vec![x.clone()];
    let mut pattern = Vec::with_capacity(steps.len());
    for t in steps {
        if t.system() != x.system() {
            return Err(Error::SystemMismatch);
        }
        if !t.is_reflection() {
            return Err(Error::NotAReflection);
        }
        let prev = vertices.last().unwrap();
        let next = prev * t;
        let (lp, ln) = (prev.length(), next.length());
        debug_assert_ne!(lp, ln, "reflection step must change length parity");
        pattern.push(if lp < ln { Direction::Up } else { Direction::Down });
        vertices.push(next);
    }
    Ok(BruhatPath {
        start: x.clone(),
        steps: steps.to_vec(),
        vertices,
        pattern,
    })
}

/// Valley test: the pattern must be down^i up^(n−i) for a unique pivot i.
pub fn classify_shape(p: &BruhatPath) -> Shape {
    let pattern = p.pattern();
    let pivot = pattern
        .iter()
        .position(|d| *d == Direction::Up)
        .unwrap_or(pattern.len());
    if pattern[pivot..].iter().all(|d| *d == Direction::Up) {
        Shape::Valley { pivot }
    } else {
        Shape::NotValley
    }
}

/// A factorization is reduced iff its length equals ℓ_T of its product.
pub fn is_reduced_factorization(steps: &[Element]) -> Result<bool> {
    is_reduced_factorization_with(steps, DEFAULT_WORD_BUDGET)
}

pub fn is_reduced_factorization_with(steps: &[Element], budget: usize) -> Result<bool> {
    let Some(first) = steps.first() else {
        return Ok(true); // empty product is the identity, ℓ_T = 0
    };
    let mut product = first.system().identity();
    for t in steps {
        if !t.is_reflection() {
            return Err(Error::NotAReflection);
        }
        product = &product * t;
    }
    Ok(reflection_length_with(&product, None, budget)? == steps.len())
}

/// A finite piece of Ω_dir: vertices sorted ShortLex, each edge recorded once
/// in its upward orientation with the reflection that labels it.
pub struct BruhatGraph {
    sys: CoxeterSystem,
    vertices: Vec<Element>,
    index: HashMap<Element, usize>,
    edges: Vec<(usize, usize, Element)>,
}

impl BruhatGraph {
    fn build(sys: &CoxeterSystem, mut vertices: Vec<Element>, refls: &[Element]) -> BruhatGraph {
        vertices.sort();
        let index: HashMap<Element, usize> =
            vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (ui, u) in vertices.iter().enumerate() {
            for t in refls {
                let v = u * t;
                let Some(&vi) = index.get(&v) else { continue };
                if u.length() < v.length() {
                    edges.push((ui, vi, t.clone()));
                }
            }
        }
        BruhatGraph { sys: sys.clone(), vertices, index, edges }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as (from, to, label) with ℓ(from) < ℓ(to).
    pub fn edges(&self) -> impl Iterator<Item = (&Element, &Element, &Element)> {
        self.edges
            .iter()
            .map(|(u, v, t)| (&self.vertices[*u], &self.vertices[*v], t))
    }

    pub fn contains_vertex(&self, w: &Element) -> bool {
        self.index.contains_key(w)
    }

    pub fn out_degree(&self, w: &Element) -> Option<usize> {
        let i = *self.index.get(w)?;
        Some(self.edges.iter().filter(|(u, _, _)| *u == i).count())
    }

    /// BFS distances ignoring edge orientation, from a vertex of the graph.
    pub fn undirected_distances_from(&self, from: &Element) -> Result<HashMap<Element, usize>> {
        let Some(&start) = self.index.get(from) else {
            return Err(Error::Contract("start vertex is not in the graph".into()));
        };
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for (u, v, _) in &self.edges {
            adj[*u].push(*v);
            adj[*v].push(*u);
        }
        let mut dist = HashMap::new();
        dist.insert(self.vertices[start].clone(), 0usize);
        let mut queue = VecDeque::new();
        queue.push_back(start);
        let mut dist_idx = vec![usize::MAX; self.vertices.len()];
        dist_idx[start] = 0;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist_idx[v] == usize::MAX {
                    dist_idx[v] = dist_idx[u] + 1;
                    dist.insert(self.vertices[v].clone(), dist_idx[v]);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Graphviz digraph; vertex labels are canonical words, edges point upward
    /// in length.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bruhat {\n  rankdir=BT;\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (u, v, t) in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[*u], self.vertices[*v], t
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Compare two graphs via the identity map on elements: equal vertex sets and
/// equal oriented edge sets.
pub fn same_graph(a: &BruhatGraph, b: &BruhatGraph) -> bool {
    if a.vertices != b.vertices {
        return false;
    }
    let ea: HashSet<(usize, usize)> = a.edges.iter().map(|(u, v, _)| (*u, *v)).collect();
    let eb: HashSet<(usize, usize)> = b.edges.iter().map(|(u, v, _)| (*u, *v)).collect();
    ea == eb
}

/// The ball of Ω_dir of the given radius around e: vertices with ℓ ≤ radius,
/// edges w → wt with both endpoints inside.  Works for infinite systems; the
/// reflection enumeration depth 2·radius−1 covers every edge of the ball.
pub fn directed_ball(sys: &CoxeterSystem, radius: usize) -> Result<BruhatGraph> {
    let depth = if radius == 0 { 0 } else { 2 * radius - 1 };
    let refls = enumerate_reflections(sys, Some(depth))?;
    directed_ball_with(sys, radius, &refls)
}

/// As [`directed_ball`], with a caller-provided reflection set (which must
/// cover the radius).
pub fn directed_ball_with(
    sys: &CoxeterSystem,
    radius: usize,
    refls: &ReflectionSet,
) -> Result<BruhatGraph> {
    if !refls.covers_radius(radius) {
        let depth = match refls.completeness() {
            reflect::Completeness::DepthBounded(d) => d,
            reflect::Completeness::Full => unreachable!("full sets cover every radius"),
        };
        return Err(Error::InsufficientReflectionDepth { depth, radius });
    }
    // Level BFS by simple generators: new elements at level k have ℓ = k.
    let mut vertices = vec![sys.identity()];
    let mut seen: HashSet<Element> = vertices.iter().cloned().collect();
    let mut frontier = vertices.clone();
    for _ in 1..=radius {
        let mut next = Vec::new();
        for u in &frontier {
            for s in 0..sys.rank() {
                let v = u.mul_gen(s);
                if seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        vertices.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(BruhatGraph::build(sys, vertices, refls.reflections()))
}

/// The full Ω_dir of a finite system (budget bounds the group order).
pub fn full_directed_graph(sys: &CoxeterSystem, budget: usize) -> Result<BruhatGraph> {
    let elements = sys.enumerate_elements(budget)?;
    let refls = enumerate_reflections(sys, None)?;
    Ok(BruhatGraph::build(sys, elements, refls.reflections()))
}

/// Induced subgraph of Ω_dir on the vertex set of W'.  The graph must contain
/// every element of W'.
pub fn restrict_to_subgroup(
    graph: &BruhatGraph,
    sub: &ReflectionSubgroup,
) -> Result<BruhatGraph> {
    if graph.system() != sub.system() {
        return Err(Error::SystemMismatch);
    }
    if !sub.is_complete() {
        return Err(Error::IncompleteSubgroup);
    }
    for w in sub.elements() {
        if !graph.contains_vertex(w) {
            return Err(Error::Contract(
                "graph does not cover the subgroup's vertex set".into(),
            ));
        }
    }
    let vertices: Vec<Element> = sub.elements().to_vec();
    let index: HashMap<Element, usize> =
        vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edges = Vec::new();
    for (u, v, t) in graph.edges() {
        if let (Some(&ui), Some(&vi)) = (index.get(u), index.get(v)) {
            edges.push((ui, vi, t.clone()));
        }
    }
    Ok(BruhatGraph { sys: graph.sys.clone(), vertices, index, edges })
}

/// The directed Bruhat graph of W' built from W' alone: edges u — ut' for
/// t' ∈ T', oriented by the length function of (W', canonical simples),
/// computed as BFS depth over the canonical simple system.
pub fn subgroup_directed_graph(sub: &ReflectionSubgroup) -> Result<BruhatGraph> {
    let simples = sub.canonical_simple_system()?;
    let refls = sub.reflections()?;
    let id = sub.system().identity();
    let mut len_in_sub: HashMap<Element, usize> = HashMap::new();
    len_in_sub.insert(id.clone(), 0);
    let mut queue = VecDeque::new();
    queue.push_back(id);
    while let Some(u) = queue.pop_front() {
        let du = len_in_sub[&u];
        for t in &simples {
            let v = &u * t;
            if !len_in_sub.contains_key(&v) {
                len_in_sub.insert(v.clone(), du + 1);
                queue.push_back(v);
            }
        }
    }
    debug_assert_eq!(len_in_sub.len(), sub.elements().len());

    let vertices: Vec<Element> = sub.elements().to_vec();
    let index: HashMap<Element, usize> =
        vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let mut edges = Vec::new();
    for (ui, u) in vertices.iter().enumerate() {
        for t in refls {
            let v = u * t;
            let vi = index[&v];
            let (lu, lv) = (len_in_sub[u], len_in_sub[&v]);
            debug_assert_ne!(lu, lv);
            if lu < lv {
                edges.push((ui, vi, t.clone()));
            }
        }
    }
    Ok(BruhatGraph { sys: sub.system().clone(), vertices, index, edges })
}

/// Distances from e in the undirected Bruhat graph of a finite system
/// (cached); in finite groups this equals ℓ_T.
pub fn distance_from_identity_table(
    sys: &CoxeterSystem,
    budget: usize,
) -> Result<&HashMap<Element, usize>> {
    reflect::reflection_distances(sys, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxEntry;
    use crate::reflect::subgroup_closure;

    fn words(elems: &[Element]) -> Vec<Vec<usize>> {
        elems.iter().map(|w| w.canonical_word().clone()).collect()
    }

    #[test]
    fn paths_and_patterns() {
        let a2 = CoxeterSystem::type_a(2);
        let e = a2.identity();
        let s1 = a2.generator(0).unwrap();
        let p = path_of_factorization(&e, &[s1.clone()]).unwrap();
        assert_eq!(p.pattern(), &[Direction::Up]);
        assert_eq!(p.endpoint(), &s1);

        let t = a2.element_from_word(&[0, 1, 0]).unwrap();
        let p = path_of_factorization(&e, &[t, s1.clone()]).unwrap();
        assert_eq!(
            p.vertices().iter().map(|v| v.length()).collect::<Vec<_>>(),
            vec![0, 3, 2]
        );
        assert_eq!(p.pattern(), &[Direction::Up, Direction::Down]);
        assert_eq!(classify_shape(&p), Shape::NotValley);

        // Endpoint = start · product, for any start.
        let x = a2.generator(1).unwrap();
        let q = path_of_factorization(&x, p.steps()).unwrap();
        assert_eq!(q.endpoint(), &(&(&x * &p.steps()[0]) * &s1));

        // Non-reflection step.
        let rot = a2.element_from_word(&[0, 1]).unwrap();
        assert!(matches!(
            path_of_factorization(&e, &[rot]),
            Err(Error::NotAReflection)
        ));
    }

    #[test]
    fn the_all_up_rank5_path() {
        let a5 = CoxeterSystem::type_a(5);
        let word = |w: &[usize]| a5.element_from_word(w).unwrap();
        let f = [
            word(&[1]),
            word(&[4]),
            word(&[4, 2, 4]),
            word(&[4, 2, 1, 0, 1, 2, 4]),
            word(&[4, 3, 4]),
        ];
        let p = path_of_factorization(&a5.identity(), &f).unwrap();
        assert_eq!(
            words(p.vertices()),
            vec![
                vec![],
                vec![1],
                vec![1, 4],
                vec![1, 2, 4],
                vec![0, 1, 2, 4],
                vec![0, 1, 2, 3, 4],
            ]
        );
        assert!(p.pattern().iter().all(|d| *d == Direction::Up));
        assert_eq!(classify_shape(&p), Shape::Valley { pivot: 0 });
    }

    #[test]
    fn shape_classification() {
        let a2 = CoxeterSystem::type_a(2);
        let s1 = a2.generator(0).unwrap();
        let s2 = a2.generator(1).unwrap();
        // Build paths realizing given patterns.
        let w0 = a2.element_from_word(&[0, 1, 0]).unwrap();
        // From w0: down, down, up is impossible in A2 (ℓ ≤ 3); use down then up.
        let p = path_of_factorization(&s1, &[s1.clone(), s2.clone()]).unwrap();
        assert_eq!(p.pattern(), &[Direction::Down, Direction::Up]);
        assert_eq!(classify_shape(&p), Shape::Valley { pivot: 1 });
        // All down.
        let p = path_of_factorization(&w0, &[s1.clone()]).unwrap();
        assert_eq!(classify_shape(&p), Shape::Valley { pivot: 1 });
        // Empty path.
        let p = path_of_factorization(&a2.identity(), &[]).unwrap();
        assert_eq!(classify_shape(&p), Shape::Valley { pivot: 0 });
    }

    #[test]
    fn reduced_factorizations() {
        let a2 = CoxeterSystem::type_a(2);
        let s1 = a2.generator(0).unwrap();
        let s2 = a2.generator(1).unwrap();
        let t = a2.element_from_word(&[0, 1, 0]).unwrap();
        assert!(is_reduced_factorization(&[s1.clone(), s2.clone()]).unwrap());
        assert!(!is_reduced_factorization(&[s1.clone(), s1.clone()]).unwrap());
        assert!(!is_reduced_factorization(&[s1.clone(), s2.clone(), t]).unwrap());
        assert!(is_reduced_factorization(&[]).unwrap());
    }

    #[test]
    fn balls_and_full_graphs() {
        let a2 = CoxeterSystem::type_a(2);
        let ball0 = directed_ball(&a2, 0).unwrap();
        assert_eq!(ball0.vertex_count(), 1);
        assert_eq!(ball0.edge_count(), 0);

        let ball1 = directed_ball(&a2, 1).unwrap();
        assert_eq!(ball1.vertex_count(), 3);
        assert_eq!(ball1.edge_count(), 2); // e→s1, e→s2; s1s2s1 is outside

        let ball3 = directed_ball(&a2, 3).unwrap();
        assert_eq!(ball3.vertex_count(), 6);
        assert_eq!(ball3.out_degree(&a2.identity()), Some(3));

        let full = full_directed_graph(&CoxeterSystem::type_a(3), 100).unwrap();
        assert_eq!(full.vertex_count(), 24);
        assert_eq!(full.edge_count(), 72); // 24·6/2

        // No edge joins equal lengths, and orientation is upward.
        for (u, v, t) in full.edges() {
            assert!(u.length() < v.length());
            assert_eq!(&(u * t), v);
        }
    }

    #[test]
    fn infinite_ball_matches_brute_force() {
        let aff = CoxeterSystem::from_links(
            3,
            &[
                (0, 1, CoxEntry::Finite(3)),
                (1, 2, CoxEntry::Finite(3)),
                (0, 2, CoxEntry::Finite(3)),
            ],
        )
        .unwrap();
        let ball = directed_ball(&aff, 2).unwrap();
        assert_eq!(ball.vertex_count(), 10); // e, 3 of length 1, 6 of length 2
        let refls = enumerate_reflections(&aff, Some(3)).unwrap();
        let mut expected = 0;
        for u in ball.vertices() {
            for v in ball.vertices() {
                if u.length() < v.length() && refls.contains(&(&u.inverse() * v)) {
                    expected += 1;
                }
            }
        }
        assert_eq!(ball.edge_count(), expected);
    }

    #[test]
    fn insufficient_depth_is_reported() {
        let a3 = CoxeterSystem::type_a(3);
        let shallow = enumerate_reflections(&a3, Some(1)).unwrap();
        assert!(matches!(
            directed_ball_with(&a3, 3, &shallow),
            Err(Error::InsufficientReflectionDepth { depth: 1, radius: 3 })
        ));
    }

    #[test]
    fn restriction_and_subgroup_graph() {
        let a2 = CoxeterSystem::type_a(2);
        let full = full_directed_graph(&a2, 100).unwrap();
        let s1 = a2.generator(0).unwrap();
        let sub = subgroup_closure(&[s1.clone()], 100).unwrap();
        let restricted = restrict_to_subgroup(&full, &sub).unwrap();
        assert_eq!(restricted.vertex_count(), 2);
        assert_eq!(restricted.edge_count(), 1);

        // Restricting to the whole group is the identity.
        let all = subgroup_closure(
            &enumerate_reflections(&a2, None).unwrap().reflections().to_vec(),
            100,
        )
        .unwrap();
        let same = restrict_to_subgroup(&full, &all).unwrap();
        assert!(same_graph(&full, &same));

        // The internal graph of the whole group agrees with Ω_dir.
        let internal = subgroup_directed_graph(&all).unwrap();
        assert!(same_graph(&full, &internal));
    }

    #[test]
    fn restricted_graph_matches_subgroup_graph_in_b3() {
        let b3 = CoxeterSystem::from_links(
            3,
            &[(0, 1, CoxEntry::Finite(4)), (1, 2, CoxEntry::Finite(3))],
        )
        .unwrap();
        let g = b3.generators();
        let u = b3.element_from_word(&[0, 1]).unwrap();
        let conj = |w: &Element, t: &Element| &(w * t) * &w.inverse();
        let t1 = conj(&u, &g[1]);
        let t2 = conj(&u, &g[2]);
        let sub = subgroup_closure(&[t1, t2], 100).unwrap();
        assert_eq!(sub.order().unwrap(), 6);

        let full = full_directed_graph(&b3, 100).unwrap();
        let induced = restrict_to_subgroup(&full, &sub).unwrap();
        let internal = subgroup_directed_graph(&sub).unwrap();
        assert_eq!(induced.vertex_count(), 6);
        assert_eq!(induced.edge_count(), 9); // 6·3/2 edges of a hexagon's Ω
        assert!(same_graph(&induced, &internal));
    }

    #[test]
    fn undirected_distances_equal_reflection_length() {
        let b2 = CoxeterSystem::dihedral(Some(4));
        let full = full_directed_graph(&b2, 100).unwrap();
        let dist = full.undirected_distances_from(&b2.identity()).unwrap();
        let table = distance_from_identity_table(&b2, 100).unwrap();
        for w in b2.enumerate_elements(100).unwrap() {
            assert_eq!(dist[&w], table[&w]);
            assert_eq!(dist[&w], crate::reflect::reflection_length(&w).unwrap());
        }
    }

    #[test]
    fn dot_export() {
        let a2 = CoxeterSystem::type_a(2);
        let ball = directed_ball(&a2, 1).unwrap();
        let dot = ball.to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("\"e\";"));
        assert!(dot.contains("\"e\" -> \"1\""));
        assert!(dot.contains("\"e\" -> \"2\""));
        assert!(dot.ends_with("}\n"));
    }
}
