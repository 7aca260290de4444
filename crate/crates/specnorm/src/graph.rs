//! The graph functor: spaces become directed graphs on their points with an
//! edge for every strict specialization, morphisms become vertex maps under
//! which each edge lands on an edge or collapses. Includes functor-law
//! verification and deterministic DOT export.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::morphism::SchemeMorphism;
use crate::space::SpectralSpace;

/// Directed graph of all strict specializations of one space.
#[derive(Debug, Clone, Serialize)]
pub struct SpecGraph {
    pub name: String,
    pub vertices: Vec<String>,
    /// Canonical index pairs, sorted; no self-loops.
    pub edges: Vec<(usize, usize)>,
}

/// A graph homomorphism in the collapsed sense: every edge maps to an edge
/// or to a single vertex.
#[derive(Debug, Clone, Serialize)]
pub struct GraphHom {
    pub source: SpecGraph,
    pub target: SpecGraph,
    pub vertex_map: Vec<usize>,
}

pub fn gamma_space(space: &SpectralSpace) -> SpecGraph {
    let mut edges = Vec::new();
    for x in 0..space.len() {
        for y in 0..space.len() {
            if space.strictly_specializes(x, y) {
                edges.push((x, y));
            }
        }
    }
    SpecGraph {
        name: space.name().to_owned(),
        vertices: space.point_names().to_vec(),
        edges,
    }
}

pub fn gamma_morphism(f: &SchemeMorphism<'_>) -> GraphHom {
    GraphHom {
        source: gamma_space(f.source()),
        target: gamma_space(f.target()),
        vertex_map: f.map().to_vec(),
    }
}

impl SpecGraph {
    /// Structural equality; the display name does not participate.
    pub fn same_shape(&self, other: &SpecGraph) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a, b)).is_ok()
    }

    /// Edge reachability along directed edges; reflexive.
    pub fn reachable(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            for &(a, b) in &self.edges {
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        false
    }

    pub fn is_acyclic(&self) -> bool {
        (0..self.vertices.len())
            .all(|v| !self.edges.iter().any(|&(a, b)| a == v && self.reachable(b, v)))
    }

    /// Transitive reduction: edges admitting no two-step detour.
    pub fn reduction_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(a, b)| {
                !self
                    .edges
                    .iter()
                    .any(|&(x, z)| x == a && z != b && self.has_edge(z, b))
            })
            .collect()
    }

    /// Connected components of the undirected view of the given edge set
    /// over all vertices of the graph.
    pub fn undirected_components(&self, edges: &[(usize, usize)]) -> usize {
        let n = self.vertices.len();
        let mut comp: Vec<Option<usize>> = vec![None; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start].is_some() {
                continue;
            }
            count += 1;
            comp[start] = Some(count);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(a, b) in edges {
                    for (from, to) in [(a, b), (b, a)] {
                        if from == v && comp[to].is_none() {
                            comp[to] = Some(count);
                            stack.push(to);
                        }
                    }
                }
            }
        }
        count
    }

    /// Independent cycles of the undirected view: `E - V + C`.
    pub fn undirected_cycle_rank(&self, edges: &[(usize, usize)]) -> usize {
        edges.len() + self.undirected_components(edges) - self.vertices.len()
    }

    pub fn is_tree(&self) -> bool {
        self.undirected_components(&self.edges) == 1
            && self.edges.len() + 1 == self.vertices.len()
    }
}

impl GraphHom {
    /// Every source edge maps to a target edge or collapses to one vertex.
    pub fn is_edge_compatible(&self) -> bool {
        self.source.edges.iter().all(|&(a, b)| {
            let (fa, fb) = (self.vertex_map[a], self.vertex_map[b]);
            fa == fb || self.target.has_edge(fa, fb)
        })
    }
}

/// Both functor laws on concrete data: composites map to composites and
/// identities map to identities on both endpoint spaces.
pub fn check_functor_laws(f: &SchemeMorphism<'_>, g: &SchemeMorphism<'_>) -> Result<bool> {
    if !f.target().same_structure(g.source()) {
        return Err(Error::NotComposable);
    }
    let composite_map: Vec<usize> = f.map().iter().map(|&x| g.map()[x]).collect();
    let composite = SchemeMorphism::from_map(f.source(), g.target(), composite_map)?;
    let hom_of_composite = gamma_morphism(&composite);
    let hom_f = gamma_morphism(f);
    let hom_g = gamma_morphism(g);
    let composed_map: Vec<usize> = hom_f.vertex_map.iter().map(|&v| hom_g.vertex_map[v]).collect();
    let composition_law = hom_of_composite.source.same_shape(&hom_f.source)
        && hom_of_composite.target.same_shape(&hom_g.target)
        && hom_of_composite.vertex_map == composed_map
        && hom_of_composite.is_edge_compatible();
    let identity_law = [f.source(), g.target()].into_iter().all(|space| {
        let hom = gamma_morphism(&SchemeMorphism::identity(space));
        hom.source.same_shape(&hom.target)
            && hom.vertex_map == (0..space.len()).collect::<Vec<_>>()
    });
    Ok(composition_law && identity_law)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeMode {
    Cover,
    All,
}

impl FromStr for EdgeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cover" => Ok(EdgeMode::Cover),
            "all" => Ok(EdgeMode::All),
            other => Err(Error::InvalidConfig(format!(
                "edge mode must be cover or all, got {other:?}"
            ))),
        }
    }
}

/// DOT text: vertices in canonical order, then one edge per line.
pub fn export_dot(graph: &SpecGraph, mode: EdgeMode) -> String {
    let edges = match mode {
        EdgeMode::Cover => graph.reduction_edges(),
        EdgeMode::All => graph.edges.clone(),
    };
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", graph.name).unwrap();
    for v in &graph.vertices {
        writeln!(out, "  \"{v}\";").unwrap();
    }
    for (a, b) in edges {
        writeln!(
            out,
            "  \"{}\" -> \"{}\";",
            graph.vertices[a], graph.vertices[b]
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_poset_masks, enumerate_monotone_maps, poset_from_mask};

    fn three_chain() -> SpectralSpace {
        SpectralSpace::build("3chain", &["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn singleton_graph_has_no_edges() {
        let s = SpectralSpace::build("pt", &["x"], &[] as &[(&str, &str)]).unwrap();
        let g = gamma_space(&s);
        assert_eq!(g.vertices, vec!["x"]);
        assert!(g.edges.is_empty());
        assert_eq!(export_dot(&g, EdgeMode::All), "digraph \"pt\" {\n  \"x\";\n}\n");
    }

    #[test]
    fn chain_graph_includes_transitive_edges() {
        let g = gamma_space(&three_chain());
        assert_eq!(g.edges, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.reduction_edges(), vec![(0, 1), (1, 2)]);
        assert!(g.is_acyclic());
    }

    #[test]
    fn dot_cover_mode_golden() {
        let s = SpectralSpace::build("2chain", &["g", "c"], &[("g", "c")]).unwrap();
        let dot = export_dot(&gamma_space(&s), EdgeMode::Cover);
        assert_eq!(
            dot,
            "digraph \"2chain\" {\n  \"g\";\n  \"c\";\n  \"g\" -> \"c\";\n}\n"
        );
    }

    #[test]
    fn dot_all_mode_emits_every_strict_pair() {
        let dot = export_dot(&gamma_space(&three_chain()), EdgeMode::All);
        assert_eq!(dot.matches(" -> ").count(), 3);
    }

    #[test]
    fn reachability_equals_strict_specialization() {
        for mask in all_poset_masks(4) {
            let s = poset_from_mask(4, mask);
            let g = gamma_space(&s);
            for x in 0..4 {
                for y in 0..4 {
                    if x != y {
                        assert_eq!(g.reachable(x, y), s.strictly_specializes(x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn morphism_images_respect_edges() {
        let c = three_chain();
        let hom = gamma_morphism(&SchemeMorphism::identity(&c));
        assert!(hom.is_edge_compatible());
        let constant = SchemeMorphism::from_map(&c, &c, vec![2, 2, 2]).unwrap();
        assert!(gamma_morphism(&constant).is_edge_compatible());
    }

    #[test]
    fn functor_laws_on_identities() {
        let c = three_chain();
        let id = SchemeMorphism::identity(&c);
        assert!(check_functor_laws(&id, &id).unwrap());
    }

    #[test]
    fn functor_laws_through_a_singleton() {
        let c = three_chain();
        let pt = SpectralSpace::build("pt", &["o"], &[] as &[(&str, &str)]).unwrap();
        let f = SchemeMorphism::from_map(&c, &pt, vec![0, 0, 0]).unwrap();
        let g = SchemeMorphism::from_map(&pt, &c, vec![1]).unwrap();
        assert!(check_functor_laws(&f, &g).unwrap());
    }

    #[test]
    fn non_composable_pairs_are_rejected() {
        let c = three_chain();
        let pt = SpectralSpace::build("pt", &["o"], &[] as &[(&str, &str)]).unwrap();
        let f = SchemeMorphism::identity(&c);
        let g = SchemeMorphism::identity(&pt);
        assert!(matches!(check_functor_laws(&f, &g), Err(Error::NotComposable)));
    }

    #[test]
    fn functor_laws_hold_on_small_sweep() {
        for &mx in &all_poset_masks(2) {
            for &my in &all_poset_masks(2) {
                for &mz in &all_poset_masks(2) {
                    let x = poset_from_mask(2, mx);
                    let y = poset_from_mask(2, my);
                    let z = poset_from_mask(2, mz);
                    for fm in enumerate_monotone_maps(&x, &y).unwrap() {
                        for gm in enumerate_monotone_maps(&y, &z).unwrap() {
                            let f = SchemeMorphism::from_map(&x, &y, fm.clone()).unwrap();
                            let g = SchemeMorphism::from_map(&y, &z, gm).unwrap();
                            assert!(check_functor_laws(&f, &g).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tree_and_cycle_rank_helpers() {
        let star = SpectralSpace::build(
            "star",
            &["o", "p", "q"],
            &[("o", "p"), ("o", "q")],
        )
        .unwrap();
        let g = gamma_space(&star);
        assert!(g.is_tree());
        assert_eq!(g.undirected_cycle_rank(&g.edges), 0);
        // Two routes from generic to the shared closed point make one cycle.
        let d = SpectralSpace::build(
            "diamond",
            &["a", "b1", "b2", "c"],
            &[("a", "b1"), ("a", "b2"), ("b1", "c"), ("b2", "c")],
        )
        .unwrap();
        let gd = gamma_space(&d);
        assert_eq!(gd.undirected_cycle_rank(&gd.reduction_edges()), 1);
    }
}
