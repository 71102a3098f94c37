//! Rooted plane maps encoded by dart permutations.
//!
//! A map on `2E` darts (numbered `1..=2E`) is given by a rotation `sigma`
//! (counterclockwise next dart around each vertex) and a fixed-point-free
//! involution `alpha` (edge pairing).  Faces are the cycles of the
//! composite `phi = sigma . alpha`; with a counterclockwise rotation this
//! traces every face with its interior on the left, so the orbit of the
//! marked (outer) face walks the map boundary clockwise.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// 1-based dart identifier.
pub type DartId = u32;
/// Index into the canonical vertex list.
pub type VertexId = usize;
/// Index into the canonical (lexicographically sorted) face list.
pub type FaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Black => 'b',
            Color::White => 'w',
        }
    }

    pub fn from_letter(c: char) -> Option<Color> {
        match c {
            'b' => Some(Color::Black),
            'w' => Some(Color::White),
            _ => None,
        }
    }
}

/// A rooted plane map.  Immutable after construction.
///
/// The atomic map (one vertex, no edge) is admitted as the special case
/// `n_darts == 0`; it has one synthetic vertex and one face.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlaneMap {
    sigma: Vec<DartId>,
    alpha: Vec<DartId>,
    root: DartId,
    outer: FaceId,
    vertex_of: Vec<VertexId>,
    vertices: Vec<Vec<DartId>>,
    face_of: Vec<FaceId>,
    faces: Vec<Vec<DartId>>,
    coloring: Option<Vec<Color>>,
}

/// Collect the cycles of a permutation given as a 1-based lookup table.
/// Each cycle is rotated to start at its minimal element and the cycle
/// list is sorted by that element.
pub(crate) fn permutation_cycles(perm: &[DartId]) -> Vec<Vec<DartId>> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 1..=n as DartId {
        if seen[(start - 1) as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut d = start;
        loop {
            seen[(d - 1) as usize] = true;
            cycle.push(d);
            d = perm[(d - 1) as usize];
            if d == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    cycles
}

impl PlaneMap {
    /// Validate `(sigma, alpha, root, outer)` and compute the derived data.
    ///
    /// Rejects alpha fixed points, non-involutive alpha, non-transitive
    /// actions and positive genus.  A proper 2-coloring is attempted and
    /// stored when it exists, normalised so the root vertex is white.
    pub fn build(
        sigma: Vec<DartId>,
        alpha: Vec<DartId>,
        root: DartId,
        outer: FaceId,
    ) -> Result<PlaneMap> {
        let n = sigma.len();
        if alpha.len() != n {
            return Err(Error::InvalidMap("sigma and alpha sizes differ".into()));
        }
        if n == 0 {
            if root != 0 || outer != 0 {
                return Err(Error::InvalidMap(
                    "atomic map has no darts; root/outer must be 0".into(),
                ));
            }
            return Ok(PlaneMap::atomic());
        }
        if n % 2 != 0 {
            return Err(Error::InvalidMap("odd number of darts".into()));
        }
        let in_range = |d: DartId| d >= 1 && d as usize <= n;
        if !in_range(root) {
            return Err(Error::InvalidMap("root dart out of range".into()));
        }
        let mut seen = vec![false; n];
        for &d in &sigma {
            if !in_range(d) {
                return Err(Error::InvalidMap("sigma value out of range".into()));
            }
            if seen[(d - 1) as usize] {
                return Err(Error::InvalidMap("sigma is not a permutation".into()));
            }
            seen[(d - 1) as usize] = true;
        }
        for (i, &d) in alpha.iter().enumerate() {
            if !in_range(d) {
                return Err(Error::InvalidMap("alpha value out of range".into()));
            }
            if d as usize == i + 1 {
                return Err(Error::InvalidMap("alpha has a fixed point".into()));
            }
            if alpha[(d - 1) as usize] as usize != i + 1 {
                return Err(Error::InvalidMap("alpha is not an involution".into()));
            }
        }

        // Transitivity of the group generated by sigma and alpha.
        let mut reach = vec![false; n];
        let mut stack = vec![1 as DartId];
        reach[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for nd in [sigma[(d - 1) as usize], alpha[(d - 1) as usize]] {
                if !reach[(nd - 1) as usize] {
                    reach[(nd - 1) as usize] = true;
                    count += 1;
                    stack.push(nd);
                }
            }
        }
        if count != n {
            return Err(Error::InvalidMap("disconnected".into()));
        }

        let vertices = permutation_cycles(&sigma);
        let mut vertex_of = vec![0usize; n];
        for (vi, cyc) in vertices.iter().enumerate() {
            for &d in cyc {
                vertex_of[(d - 1) as usize] = vi;
            }
        }
        // phi = sigma . alpha
        let phi: Vec<DartId> = (1..=n as DartId)
            .map(|d| sigma[(alpha[(d - 1) as usize] - 1) as usize])
            .collect();
        let faces = permutation_cycles(&phi);
        let mut face_of = vec![0usize; n];
        for (fi, cyc) in faces.iter().enumerate() {
            for &d in cyc {
                face_of[(d - 1) as usize] = fi;
            }
        }
        let v = vertices.len() as i64;
        let e = (n / 2) as i64;
        let f = faces.len() as i64;
        if v - e + f != 2 {
            return Err(Error::InvalidMap(format!(
                "genus is not 0 (V={v}, E={e}, F={f})"
            )));
        }
        if outer >= faces.len() {
            return Err(Error::InvalidMap("outer face index out of range".into()));
        }

        let mut m = PlaneMap {
            sigma,
            alpha,
            root,
            outer,
            vertex_of,
            vertices,
            face_of,
            faces,
            coloring: None,
        };
        m.coloring = m.try_two_coloring(Color::White);
        Ok(m)
    }

    /// The atomic map: one vertex, no edge, one face.
    pub fn atomic() -> PlaneMap {
        PlaneMap {
            sigma: Vec::new(),
            alpha: Vec::new(),
            root: 0,
            outer: 0,
            vertex_of: Vec::new(),
            vertices: vec![Vec::new()],
            face_of: Vec::new(),
            faces: vec![Vec::new()],
            coloring: Some(vec![Color::White]),
        }
    }

    pub fn is_atomic(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn n_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn sigma(&self, d: DartId) -> DartId {
        self.sigma[(d - 1) as usize]
    }

    pub fn sigma_inv(&self, d: DartId) -> DartId {
        // Rotations are short; a linear scan keeps the structure lean.
        let mut x = d;
        loop {
            let nx = self.sigma(x);
            if nx == d {
                return x;
            }
            x = nx;
        }
    }

    pub fn alpha(&self, d: DartId) -> DartId {
        self.alpha[(d - 1) as usize]
    }

    /// Next dart along the face boundary (face interior stays on the left).
    pub fn phi(&self, d: DartId) -> DartId {
        self.sigma(self.alpha(d))
    }

    pub fn root_dart(&self) -> DartId {
        self.root
    }

    pub fn root_vertex(&self) -> VertexId {
        if self.is_atomic() {
            0
        } else {
            self.vertex_of(self.root)
        }
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer
    }

    pub fn vertex_of(&self, d: DartId) -> VertexId {
        self.vertex_of[(d - 1) as usize]
    }

    /// Face on the left of dart `d`.
    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face_of[(d - 1) as usize]
    }

    pub fn vertices(&self) -> &[Vec<DartId>] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<DartId>] {
        &self.faces
    }

    pub fn darts(&self) -> impl Iterator<Item = DartId> {
        1..=self.sigma.len() as DartId
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v].len()
    }

    pub fn coloring(&self) -> Option<&[Color]> {
        self.coloring.as_deref()
    }

    pub fn is_bipartite(&self) -> bool {
        self.coloring.is_some()
    }

    pub fn color(&self, v: VertexId) -> Option<Color> {
        self.coloring.as_ref().map(|c| c[v])
    }

    /// 2-coloring with the root vertex given `root_color`, when one exists.
    fn try_two_coloring(&self, root_color: Color) -> Option<Vec<Color>> {
        let nv = self.vertices.len();
        let mut colors: Vec<Option<Color>> = vec![None; nv];
        let rv = self.root_vertex();
        colors[rv] = Some(root_color);
        let mut stack = vec![rv];
        while let Some(v) = stack.pop() {
            let cv = colors[v].unwrap();
            for &d in &self.vertices[v] {
                let w = self.vertex_of(self.alpha(d));
                match colors[w] {
                    None => {
                        colors[w] = Some(cv.flip());
                        stack.push(w);
                    }
                    Some(cw) => {
                        if cw == cv {
                            return None;
                        }
                    }
                }
            }
        }
        Some(colors.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Same map with the root vertex colored `root_color`.
    pub fn with_root_color(&self, root_color: Color) -> Option<PlaneMap> {
        let mut m = self.clone();
        if m.is_atomic() {
            m.coloring = Some(vec![root_color]);
            return Some(m);
        }
        m.coloring = m.try_two_coloring(root_color);
        if m.coloring.is_some() {
            Some(m)
        } else {
            None
        }
    }

    /// Same map with a different marked face.
    pub fn with_outer(&self, outer: FaceId) -> PlaneMap {
        assert!(outer < self.faces.len(), "outer face index out of range");
        let mut m = self.clone();
        m.outer = outer;
        m
    }

    /// Same map rooted at a different dart.
    pub fn with_root(&self, root: DartId) -> PlaneMap {
        assert!(root >= 1 && (root as usize) <= self.sigma.len());
        let mut m = self.clone();
        m.root = root;
        m
    }

    pub fn max_degree(&self) -> usize {
        self.vertices.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// Maximal degree over vertices of the requested color.
    pub fn max_degree_of(&self, color: Color) -> usize {
        let cols = self.coloring.as_ref().expect("map is not colored");
        self.vertices
            .iter()
            .enumerate()
            .filter(|(v, _)| cols[*v] == color)
            .map(|(_, c)| c.len())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut white = BTreeMap::new();
        let mut black = BTreeMap::new();
        let cols = self.coloring.as_ref().expect("map is not colored");
        for (v, cyc) in self.vertices.iter().enumerate() {
            let entry = match cols[v] {
                Color::White => white.entry(cyc.len() as u32).or_insert(0u32),
                Color::Black => black.entry(cyc.len() as u32).or_insert(0u32),
            };
            *entry += 1;
        }
        DegreeProfile { white, black }
    }

    /// Breadth-first canonical relabeling from the root dart (moves
    /// `sigma` then `alpha`).  `order[i]` is the old dart with new id
    /// `i + 1`.
    pub(crate) fn bfs_order(&self, start: DartId) -> Vec<DartId> {
        let n = self.sigma.len();
        let mut order = Vec::with_capacity(n);
        let mut new_id = vec![0u32; n];
        order.push(start);
        new_id[(start - 1) as usize] = 1;
        let mut pos = 0;
        while pos < order.len() {
            let h = order[pos];
            pos += 1;
            for nd in [self.sigma(h), self.alpha(h)] {
                if new_id[(nd - 1) as usize] == 0 {
                    new_id[(nd - 1) as usize] = order.len() as u32 + 1;
                    order.push(nd);
                }
            }
        }
        order
    }

    /// Canonical code of the rooted plane map: equal codes iff the maps
    /// are isomorphic as rooted plane maps (root, marked face, and root
    /// color when present, all preserved).
    pub fn canonical_code(&self) -> Vec<u8> {
        CodeBuilder::new(self).build()
    }

    pub fn code_builder(&self) -> CodeBuilder<'_> {
        CodeBuilder::new(self)
    }

    /// Dual map with canonical direction data when the primal is bipartite.
    pub fn dual(&self) -> crate::dual::DualMap {
        crate::dual::DualMap::of(self)
    }
}

impl fmt::Debug for PlaneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PlaneMap {{ darts: {}, sigma: {:?}, alpha: {:?}, root: {}, outer: {} }}",
            self.sigma.len(),
            self.sigma,
            self.alpha,
            self.root,
            self.outer
        )
    }
}

/// Incremental canonical-code builder; optional sections mark extra
/// decorations (a pointed vertex, a second corner, spins).
pub struct CodeBuilder<'a> {
    map: &'a PlaneMap,
    point: Option<VertexId>,
    extra_corner: Option<DartId>,
    spins: Option<&'a [Color]>,
}

impl<'a> CodeBuilder<'a> {
    fn new(map: &'a PlaneMap) -> Self {
        CodeBuilder {
            map,
            point: None,
            extra_corner: None,
            spins: None,
        }
    }

    pub fn with_point(mut self, v: VertexId) -> Self {
        self.point = Some(v);
        self
    }

    pub fn with_corner(mut self, d: DartId) -> Self {
        self.extra_corner = Some(d);
        self
    }

    pub fn with_spins(mut self, s: &'a [Color]) -> Self {
        self.spins = Some(s);
        self
    }

    pub fn build(self) -> Vec<u8> {
        let m = self.map;
        let mut code = Vec::new();
        if m.is_atomic() {
            code.push(0xA0);
            if let Some(c) = m.color(0) {
                code.push(c.letter() as u8);
            }
            if let Some(s) = self.spins {
                code.push(s[0].letter() as u8);
            }
            return code;
        }
        let order = m.bfs_order(m.root);
        let n = m.sigma.len();
        let mut new_id = vec![0u32; n];
        for (i, &d) in order.iter().enumerate() {
            new_id[(d - 1) as usize] = i as u32 + 1;
        }
        let enc = |code: &mut Vec<u8>, x: u32| code.extend_from_slice(&x.to_le_bytes());
        enc(&mut code, n as u32);
        for &d in &order {
            enc(&mut code, new_id[(m.sigma(d) - 1) as usize]);
            enc(&mut code, new_id[(m.alpha(d) - 1) as usize]);
        }
        // Outer face: smallest new dart id lying on it.
        let outer_min = m
            .darts()
            .filter(|&d| m.face_of(d) == m.outer)
            .map(|d| new_id[(d - 1) as usize])
            .min()
            .unwrap();
        enc(&mut code, outer_min);
        if let Some(c) = m.color(m.root_vertex()) {
            code.push(c.letter() as u8);
        } else {
            code.push(b'-');
        }
        // Vertex discovery order: first appearance of any of its darts.
        let vertex_rank = |v: VertexId| -> u32 {
            m.vertices[v]
                .iter()
                .map(|&d| new_id[(d - 1) as usize])
                .min()
                .unwrap()
        };
        if let Some(p) = self.point {
            code.push(b'p');
            enc(&mut code, vertex_rank(p));
        }
        if let Some(c) = self.extra_corner {
            code.push(b'c');
            enc(&mut code, new_id[(c - 1) as usize]);
        }
        if let Some(spins) = self.spins {
            code.push(b's');
            let mut ranked: Vec<(u32, Color)> = (0..m.n_vertices())
                .map(|v| (vertex_rank(v), spins[v]))
                .collect();
            ranked.sort();
            for (_, s) in ranked {
                code.push(s.letter() as u8);
            }
        }
        code
    }
}

/// Multisets of white and black vertex degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegreeProfile {
    pub white: BTreeMap<u32, u32>,
    pub black: BTreeMap<u32, u32>,
}

impl DegreeProfile {
    pub fn degree_sum(&self) -> u32 {
        self.white
            .iter()
            .chain(self.black.iter())
            .map(|(d, c)| d * c)
            .sum()
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(f: &mut fmt::Formatter<'_>, tag: char, m: &BTreeMap<u32, u32>) -> fmt::Result {
            for (d, c) in m {
                write!(f, " {tag}{d}^{c}")?;
            }
            Ok(())
        }
        write!(f, "[")?;
        side(f, 'x', &self.white)?;
        side(f, 'y', &self.black)?;
        write!(f, " ]")
    }
}

/// A spin configuration on a (not necessarily bipartite) map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpinConfiguration {
    pub spin: Vec<Color>,
    pub mono_count: u32,
}

impl SpinConfiguration {
    pub fn new(map: &PlaneMap, spin: Vec<Color>) -> SpinConfiguration {
        assert_eq!(spin.len(), map.n_vertices());
        let mut mono = 0;
        for d in map.darts() {
            let a = map.alpha(d);
            if d < a && spin[map.vertex_of(d)] == spin[map.vertex_of(a)] {
                mono += 1;
            }
        }
        SpinConfiguration {
            spin,
            mono_count: mono,
        }
    }
}

/// Exact monomial weight of a decorated map; exponents only, the
/// rational coefficient is always 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct WeightMonomial {
    pub u: u32,
    pub t: u32,
    pub nu: u32,
    pub x: BTreeMap<u32, u32>,
    pub y: BTreeMap<u32, u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightScheme {
    /// `u^F  x_deg  y_deg` over white/black vertices of a bipartite map.
    Planar,
    /// Planar divided by `u`: `u^(F-1)`.
    Plane,
    /// `t^E nu^mono u^F x_deg y_deg` over the spin classes.
    Ising,
}

/// Weight of a map under the requested scheme.  For `Ising` the spin
/// configuration supplies the vertex classes; otherwise the bipartite
/// coloring does.
pub fn weight(
    map: &PlaneMap,
    scheme: WeightScheme,
    spin: Option<&SpinConfiguration>,
) -> Result<WeightMonomial> {
    let mut w = WeightMonomial::default();
    let classes: Vec<Color> = match scheme {
        WeightScheme::Ising => {
            let s = spin.ok_or_else(|| {
                Error::Precondition("ising weight requires a spin configuration".into())
            })?;
            w.t = map.n_edges() as u32;
            w.nu = s.mono_count;
            s.spin.clone()
        }
        _ => map
            .coloring()
            .ok_or_else(|| Error::Precondition("weight requires a bipartite coloring".into()))?
            .to_vec(),
    };
    w.u = match scheme {
        WeightScheme::Plane => map.n_faces() as u32 - 1,
        _ => map.n_faces() as u32,
    };
    for v in 0..map.n_vertices() {
        let deg = map.degree(v) as u32;
        let side = match classes[v] {
            Color::White => &mut w.x,
            Color::Black => &mut w.y,
        };
        *side.entry(deg).or_insert(0) += 1;
    }
    Ok(w)
}

/// Weight of a map in the square-decorated scheme: degree-2 vertices in
/// `squares` are counted by `nu` and maximal chains of them by `t`; all
/// other (round) vertices contribute their degree variables.
pub fn square_weight(map: &PlaneMap, squares: &[bool]) -> Result<WeightMonomial> {
    let cols = map
        .coloring()
        .ok_or_else(|| Error::Precondition("square weight requires a bipartite map".into()))?;
    let mut w = WeightMonomial::default();
    w.u = map.n_faces() as u32;
    for v in 0..map.n_vertices() {
        if squares[v] {
            if map.degree(v) != 2 {
                return Err(Error::Precondition(
                    "square vertices must have degree 2".into(),
                ));
            }
            w.nu += 1;
        } else {
            let deg = map.degree(v) as u32;
            let side = match cols[v] {
                Color::White => &mut w.x,
                Color::Black => &mut w.y,
            };
            *side.entry(deg).or_insert(0) += 1;
        }
    }
    // Maximal chains of squares: count square-components of the subgraph
    // induced on square vertices, walking each chain once.
    let mut visited = vec![false; map.n_vertices()];
    for v in 0..map.n_vertices() {
        if !squares[v] || visited[v] {
            continue;
        }
        w.t += 1;
        let mut stack = vec![v];
        visited[v] = true;
        while let Some(x) = stack.pop() {
            for &d in &map.vertices()[x] {
                let y = map.vertex_of(map.alpha(d));
                if squares[y] && !visited[y] {
                    visited[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn single_edge() -> PlaneMap {
        PlaneMap::build(vec![1, 2], vec![2, 1], 1, 0).unwrap()
    }

    #[test]
    fn single_edge_map() {
        let m = single_edge();
        assert_eq!(m.n_vertices(), 2);
        assert_eq!(m.n_edges(), 1);
        assert_eq!(m.n_faces(), 1);
        assert!(m.is_bipartite());
        assert_eq!(m.color(m.root_vertex()), Some(Color::White));
    }

    #[test]
    fn loop_map_not_bipartite() {
        let m = PlaneMap::build(vec![2, 1], vec![2, 1], 1, 0).unwrap();
        assert_eq!(m.n_vertices(), 1);
        assert_eq!(m.n_faces(), 2);
        assert!(!m.is_bipartite());
    }

    #[test]
    fn disconnected_rejected() {
        // Two isolated edges.
        let err = PlaneMap::build(vec![1, 2, 3, 4], vec![2, 1, 4, 3], 1, 0).unwrap_err();
        assert!(err.to_string().contains("disconnected"));
    }

    #[test]
    fn alpha_fixed_point_rejected() {
        assert!(PlaneMap::build(vec![2, 1], vec![1, 2], 1, 0).is_err());
    }

    #[test]
    fn genus_one_rejected() {
        // One vertex of degree 4 with crossing loop pairing: V=1, E=2, F=1.
        let sigma = vec![2, 3, 4, 1];
        let alpha = vec![3, 4, 1, 2];
        let err = PlaneMap::build(sigma, alpha, 1, 0).unwrap_err();
        assert!(err.to_string().contains("genus"));
    }

    /// The 4-cycle used throughout: sigma pairs (1 8)(2 3)(4 5)(6 7),
    /// alpha = (1 2)(3 4)(5 6)(7 8).
    pub(crate) fn four_cycle() -> PlaneMap {
        let sigma = vec![8, 3, 2, 5, 4, 7, 6, 1];
        let alpha = vec![2, 1, 4, 3, 6, 5, 8, 7];
        PlaneMap::build(sigma, alpha, 1, 0).unwrap()
    }

    #[test]
    fn four_cycle_shape() {
        let m = four_cycle();
        assert_eq!(m.n_vertices(), 4);
        assert_eq!(m.n_faces(), 2);
        assert!(m.is_bipartite());
        for v in 0..4 {
            assert_eq!(m.degree(v), 2);
        }
    }

    #[test]
    fn canonical_code_relabeling_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let m = four_cycle();
        let base = m.canonical_code();
        for _ in 0..100 {
            let n = m.n_darts();
            let mut perm: Vec<DartId> = (1..=n as DartId).collect();
            perm.shuffle(&mut rng);
            // perm[old-1] = new
            let mut sigma = vec![0; n];
            let mut alpha = vec![0; n];
            for d in 1..=n as DartId {
                sigma[(perm[(d - 1) as usize] - 1) as usize] = perm[(m.sigma(d) - 1) as usize];
                alpha[(perm[(d - 1) as usize] - 1) as usize] = perm[(m.alpha(d) - 1) as usize];
            }
            let root = perm[(m.root_dart() - 1) as usize];
            // Recover the relabeled outer face index.
            let m2 = PlaneMap::build(sigma, alpha, root, 0).unwrap();
            let outer_dart = perm[(m.faces()[m.outer_face()][0] - 1) as usize];
            let m2 = m2.with_outer(m2.face_of(outer_dart));
            assert_eq!(m2.canonical_code(), base);
        }
    }

    #[test]
    fn distinct_outer_faces_distinct_codes() {
        // 2-edge path: its two faces coincide, so use the 4-cycle where
        // inner and outer faces are genuinely different markings.
        let m = four_cycle();
        let other = m.with_outer(1 - m.outer_face());
        assert_ne!(m.canonical_code(), other.canonical_code());
    }

    #[test]
    fn code_is_stable() {
        let m = single_edge();
        assert_eq!(m.canonical_code(), single_edge().canonical_code());
    }

    #[test]
    fn weights() {
        let m = single_edge();
        let w = weight(&m, WeightScheme::Plane, None).unwrap();
        assert_eq!(w.u, 0);
        assert_eq!(w.x.get(&1), Some(&1));
        assert_eq!(w.y.get(&1), Some(&1));
        let wp = weight(&m, WeightScheme::Planar, None).unwrap();
        assert_eq!(wp.u, w.u + 1);
    }

    #[test]
    fn spin_weight_one_vertex_quartic() {
        // One vertex with two nested loops: sigma = (1 2 3 4) with
        // alpha = (1 4)(2 3); V=1, E=2, F=3.
        let sigma = vec![2, 3, 4, 1];
        let alpha = vec![4, 3, 2, 1];
        let m = PlaneMap::build(sigma, alpha, 1, 0).unwrap();
        assert_eq!(m.n_faces(), 3);
        let s = SpinConfiguration::new(&m, vec![Color::White]);
        assert_eq!(s.mono_count, 2);
        let w = weight(&m, WeightScheme::Ising, Some(&s)).unwrap();
        assert_eq!(w.t, 2);
        assert_eq!(w.nu, 2);
        assert_eq!(w.u, 3);
        assert_eq!(w.x.get(&4), Some(&1));
    }
}
