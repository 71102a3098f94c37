//! Duality for plane maps.
//!
//! The dual reuses the primal dart set: the dual rotation is the primal
//! face permutation `phi` and the dual pairing is `alpha`, so dual
//! vertices are primal faces and dual faces are primal vertices (with
//! matching indices, both being min-dart-sorted cycle lists).  The dual
//! of a plane map is pointed at the vertex corresponding to the primal
//! outer face.
//!
//! When the primal is bipartite the dual is Eulerian and each dual edge
//! carries a canonical direction: the crossing of the primal edge
//! `{h_b, h_w}` (darts at the black and white endpoint) directed from
//! `face_of(h_b)` to `face_of(h_w)`.  This is the direction that keeps
//! the white dual face (the primal white vertex) on its left.

use crate::map::{Color, DartId, FaceId, PlaneMap, VertexId};

#[derive(Clone)]
pub struct DualMap {
    primal: PlaneMap,
    map: PlaneMap,
    /// Dual vertex corresponding to the primal outer face.
    pointed: VertexId,
}

impl DualMap {
    pub fn of(primal: &PlaneMap) -> DualMap {
        assert!(!primal.is_atomic(), "the atomic map has no dual edges");
        let n = primal.n_darts();
        let sigma: Vec<DartId> = (1..=n as DartId).map(|d| primal.phi(d)).collect();
        let alpha: Vec<DartId> = (1..=n as DartId).map(|d| primal.alpha(d)).collect();
        let map = PlaneMap::build(sigma, alpha, primal.root_dart(), 0).expect("dual is a map");
        // Mark the dual face holding the primal root vertex, so the
        // marking dualises the primal root-vertex/outer-face pair.
        let root_face = map
            .faces()
            .iter()
            .position(|cyc| {
                cyc.iter()
                    .any(|&d| primal.vertex_of(d) == primal.root_vertex())
            })
            .unwrap();
        let map = map.with_outer(root_face);
        let pointed_dart = primal.faces()[primal.outer_face()][0];
        let pointed = map.vertex_of(pointed_dart);
        DualMap {
            primal: primal.clone(),
            map,
            pointed,
        }
    }

    pub fn primal(&self) -> &PlaneMap {
        &self.primal
    }

    /// The dual as a plane map in its own right.
    pub fn as_map(&self) -> &PlaneMap {
        &self.map
    }

    /// Dual vertex corresponding to the primal outer face.
    pub fn pointed_vertex(&self) -> VertexId {
        self.pointed
    }

    pub fn n_vertices(&self) -> usize {
        self.map.n_vertices()
    }

    /// Dual vertex of a primal face (indices coincide, kept explicit).
    pub fn vertex_of_primal_face(&self, f: FaceId) -> VertexId {
        self.map.vertex_of(self.primal.faces()[f][0])
    }

    pub fn primal_face_of_vertex(&self, v: VertexId) -> FaceId {
        self.primal.face_of(self.map.vertices()[v][0])
    }

    pub fn primal_vertex_of_face(&self, f: FaceId) -> VertexId {
        self.primal.vertex_of(self.map.faces()[f][0])
    }

    pub fn has_canonical_direction(&self) -> bool {
        self.primal.is_bipartite()
    }

    /// Canonical direction of the dual edge crossing the primal edge of
    /// dart `d`, as (tail, head) dual vertices.
    pub fn canonical_direction_of_edge(&self, d: DartId) -> (VertexId, VertexId) {
        let cols = self
            .primal
            .coloring()
            .expect("canonical direction requires a bipartite primal");
        let a = self.primal.alpha(d);
        let black = if cols[self.primal.vertex_of(d)] == Color::Black {
            d
        } else {
            a
        };
        (
            self.map.vertex_of(black),
            self.map.vertex_of(self.primal.alpha(black)),
        )
    }

    /// All canonically directed dual arcs, one per primal edge.
    pub fn canonical_arcs(&self) -> Vec<(VertexId, VertexId)> {
        let mut arcs = Vec::with_capacity(self.primal.n_edges());
        for d in self.primal.darts() {
            if d < self.primal.alpha(d) {
                arcs.push(self.canonical_direction_of_edge(d));
            }
        }
        arcs
    }

    /// Double duality: rebuilds a plane map from the dual alone; the
    /// result is isomorphic to the primal as a rooted plane map.
    pub fn dual_back(&self) -> PlaneMap {
        let n = self.map.n_darts();
        let sigma: Vec<DartId> = (1..=n as DartId).map(|d| self.map.phi(d)).collect();
        let alpha: Vec<DartId> = (1..=n as DartId).map(|d| self.map.alpha(d)).collect();
        let m = PlaneMap::build(sigma, alpha, self.map.root_dart(), 0).expect("double dual");
        // The face of the double dual corresponding to the pointed dual
        // vertex is the original outer face.
        let dart = self.map.vertices()[self.pointed][0];
        let outer = m.face_of(dart);
        let m = m.with_outer(outer);
        match self.primal.coloring() {
            Some(cols) => m
                .with_root_color(cols[self.primal.root_vertex()])
                .expect("bipartite survives double duality"),
            None => m,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::PlaneMap;

    fn four_cycle() -> PlaneMap {
        let sigma = vec![8, 3, 2, 5, 4, 7, 6, 1];
        let alpha = vec![2, 1, 4, 3, 6, 5, 8, 7];
        PlaneMap::build(sigma, alpha, 1, 0).unwrap()
    }

    #[test]
    fn dual_of_single_edge_is_loop() {
        let m = PlaneMap::build(vec![1, 2], vec![2, 1], 1, 0).unwrap();
        let d = m.dual();
        assert_eq!(d.n_vertices(), 1);
        assert_eq!(d.as_map().n_edges(), 1);
        assert_eq!(d.as_map().n_faces(), 2);
    }

    #[test]
    fn dual_of_four_cycle() {
        let m = four_cycle();
        let d = m.dual();
        assert_eq!(d.n_vertices(), 2);
        assert_eq!(d.as_map().n_edges(), 4);
        assert_eq!(d.as_map().n_faces(), 4);
        for v in 0..d.n_vertices() {
            assert_eq!(d.as_map().degree(v) % 2, 0, "Eulerian dual");
        }
    }

    #[test]
    fn double_dual_identity() {
        for m in [
            PlaneMap::build(vec![1, 2], vec![2, 1], 1, 0).unwrap(),
            four_cycle(),
            four_cycle().with_outer(1),
        ] {
            let back = m.dual().dual_back();
            assert_eq!(back.canonical_code(), m.canonical_code());
        }
    }

    #[test]
    fn canonical_direction_keeps_white_on_left() {
        // The canonical arc of every edge must run from the face left of
        // the black-tailed dart to the face left of the white-tailed
        // dart; around a white primal vertex all incident crossings then
        // keep that vertex on their left, which is the counterclockwise
        // contour condition for white dual faces.
        let m = four_cycle();
        let d = m.dual();
        let cols = m.coloring().unwrap();
        for dart in m.darts() {
            let (tail, head) = d.canonical_direction_of_edge(dart);
            let black = if cols[m.vertex_of(dart)] == Color::Black {
                dart
            } else {
                m.alpha(dart)
            };
            assert_eq!(tail, d.vertex_of_primal_face(m.face_of(black)));
            assert_eq!(head, d.vertex_of_primal_face(m.face_of(m.alpha(black))));
        }
    }
}
