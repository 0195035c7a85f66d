//! Generalized surface codes on combinatorial surfaces `(V, E, F)`.
//!
//! Qubits live on the edges that are not open boundary edges (`E̊`). Every
//! vertex that is not an open boundary vertex (`V̊`) gives an X-type
//! stabilizer on its incident qubits; every face gives a Z-type stabilizer on
//! its qubits. Faces that touch open edges keep only their `E̊` part.
//!
//! Vertex vectors span `C_Z` and face vectors span `C_X` of the underlying
//! CSS code. Identifiers are opaque strings; qubit columns follow edge
//! declaration order.

mod lattices;

pub use lattices::{fig1, planar_patch, square, toric};

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::css::{ClassicalCode, CssCode};
use crate::error::{invalid, Error, Result};
use crate::fpalg::{independent_rows_on, FpMatrix, Modulus};
use crate::stabilizer::{correctability_witness, erasure_correctable, StabilizerCode};
use crate::symplectic::ErasurePattern;

/// Most erasure sets examined by [`locality_profile`].
pub const LOCALITY_LIMIT: u128 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub id: String,
    pub ends: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSpec {
    pub id: String,
    pub edges: Vec<String>,
}

/// The surface file layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
    pub faces: Vec<FaceSpec>,
    #[serde(default)]
    pub open_edges: Vec<String>,
}

/// A validated surface with id lookups resolved to indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surface {
    vertex_ids: Vec<String>,
    edge_ids: Vec<String>,
    face_ids: Vec<String>,
    /// Endpoint multiset of each edge, one or two vertex indices.
    edge_ends: Vec<Vec<usize>>,
    face_edges: Vec<Vec<usize>>,
    open: Vec<bool>,
}

fn index_ids(kind: &str, ids: &[String]) -> Result<HashMap<String, usize>> {
    let mut map = HashMap::with_capacity(ids.len());
    for (i, id) in ids.iter().enumerate() {
        if map.insert(id.clone(), i).is_some() {
            return Err(invalid(format!("duplicate {kind} id {id:?}")));
        }
    }
    Ok(map)
}

impl Surface {
    pub fn from_spec(spec: &SurfaceSpec) -> Result<Self> {
        let vmap = index_ids("vertex", &spec.vertices)?;
        let edge_ids: Vec<String> = spec.edges.iter().map(|e| e.id.clone()).collect();
        let emap = index_ids("edge", &edge_ids)?;
        let face_ids: Vec<String> = spec.faces.iter().map(|f| f.id.clone()).collect();
        index_ids("face", &face_ids)?;

        let mut edge_ends = Vec::with_capacity(spec.edges.len());
        for e in &spec.edges {
            if !(1..=2).contains(&e.ends.len()) {
                return Err(invalid(format!(
                    "edge {:?} has {} endpoints, expected 1 or 2",
                    e.id,
                    e.ends.len()
                )));
            }
            let ends = e
                .ends
                .iter()
                .map(|v| {
                    vmap.get(v).copied().ok_or_else(|| {
                        invalid(format!("edge {:?} references unknown vertex {v:?}", e.id))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            edge_ends.push(ends);
        }

        let mut face_edges = Vec::with_capacity(spec.faces.len());
        for f in &spec.faces {
            let mut edges = Vec::with_capacity(f.edges.len());
            for e in &f.edges {
                let idx = *emap.get(e).ok_or_else(|| {
                    invalid(format!("face {:?} references unknown edge {e:?}", f.id))
                })?;
                if edges.contains(&idx) {
                    return Err(invalid(format!("face {:?} lists edge {e:?} twice", f.id)));
                }
                edges.push(idx);
            }
            face_edges.push(edges);
        }

        let mut open = vec![false; spec.edges.len()];
        for e in &spec.open_edges {
            let idx = *emap
                .get(e)
                .ok_or_else(|| invalid(format!("unknown open edge {e:?}")))?;
            open[idx] = true;
        }

        let surface = Surface {
            vertex_ids: spec.vertices.clone(),
            edge_ids,
            face_ids,
            edge_ends,
            face_edges,
            open,
        };
        // open edges must be boundary edges
        surface.classify_boundary()?;
        Ok(surface)
    }

    /// Parses the JSON surface format.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SurfaceSpec =
            serde_json::from_str(text).map_err(|e| invalid(format!("surface file: {e}")))?;
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> SurfaceSpec {
        SurfaceSpec {
            vertices: self.vertex_ids.clone(),
            edges: self
                .edge_ids
                .iter()
                .zip(&self.edge_ends)
                .map(|(id, ends)| EdgeSpec {
                    id: id.clone(),
                    ends: ends.iter().map(|&v| self.vertex_ids[v].clone()).collect(),
                })
                .collect(),
            faces: self
                .face_ids
                .iter()
                .zip(&self.face_edges)
                .map(|(id, edges)| FaceSpec {
                    id: id.clone(),
                    edges: edges.iter().map(|&e| self.edge_ids[e].clone()).collect(),
                })
                .collect(),
            open_edges: (0..self.edge_ids.len())
                .filter(|&e| self.open[e])
                .map(|e| self.edge_ids[e].clone())
                .collect(),
        }
    }

    /// Same incidence with a different set of open boundary edges.
    pub fn with_open_edges<S: AsRef<str>>(&self, open: &[S]) -> Result<Self> {
        let mut spec = self.to_spec();
        spec.open_edges = open.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_spec(&spec)
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edge_ids
    }

    pub fn face_ids(&self) -> &[String] {
        &self.face_ids
    }

    pub fn edge_ends(&self, e: usize) -> &[usize] {
        &self.edge_ends[e]
    }

    pub fn face_edges(&self, f: usize) -> &[usize] {
        &self.face_edges[f]
    }

    pub fn is_open(&self, e: usize) -> bool {
        self.open[e]
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edge_ids.iter().position(|e| e == id)
    }

    /// Whether vertex `v` is an endpoint of edge `e`.
    pub fn incident(&self, v: usize, e: usize) -> bool {
        self.edge_ends[e].contains(&v)
    }

    /// Boundary and open/closed labels.
    pub fn classify_boundary(&self) -> Result<BoundaryProfile> {
        let ne = self.edge_ids.len();
        let mut face_count = vec![0usize; ne];
        for edges in &self.face_edges {
            for &e in edges {
                face_count[e] += 1;
            }
        }
        let is_boundary_edge: Vec<bool> = face_count.iter().map(|&c| c == 1).collect();
        if let Some(e) = (0..ne).find(|&e| self.open[e] && !is_boundary_edge[e]) {
            return Err(invalid(format!(
                "open edge {:?} is not a boundary edge (it lies in {} faces)",
                self.edge_ids[e], face_count[e]
            )));
        }

        let boundary_edges: Vec<usize> = (0..ne).filter(|&e| is_boundary_edge[e]).collect();
        let open_edges: Vec<usize> = (0..ne).filter(|&e| self.open[e]).collect();

        let boundary_faces: Vec<usize> = (0..self.face_ids.len())
            .filter(|&f| self.face_edges[f].iter().any(|&e| is_boundary_edge[e]))
            .collect();
        let open_faces: Vec<usize> = (0..self.face_ids.len())
            .filter(|&f| self.face_edges[f].iter().any(|&e| self.open[e]))
            .collect();

        let nv = self.vertex_ids.len();
        let mut boundary_vertex = vec![false; nv];
        let mut open_vertex = vec![false; nv];
        for e in 0..ne {
            for &v in &self.edge_ends[e] {
                boundary_vertex[v] |= is_boundary_edge[e];
                open_vertex[v] |= self.open[e];
            }
        }

        Ok(BoundaryProfile {
            boundary_edges,
            open_edges,
            boundary_faces,
            open_faces,
            boundary_vertices: (0..nv).filter(|&v| boundary_vertex[v]).collect(),
            open_vertices: (0..nv).filter(|&v| open_vertex[v]).collect(),
            ring_vertices: (0..nv).filter(|&v| !open_vertex[v]).collect(),
            ring_edges: (0..ne).filter(|&e| !self.open[e]).collect(),
        })
    }
}

/// Boundary classification. All entries are indices in declaration order.
///
/// An edge is boundary iff it lies in exactly one face. A boundary face is
/// open iff it contains an open edge; a boundary vertex is open iff it is an
/// endpoint of an open edge. `ring_*` collect everything that is not open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryProfile {
    pub boundary_edges: Vec<usize>,
    pub open_edges: Vec<usize>,
    pub boundary_faces: Vec<usize>,
    pub open_faces: Vec<usize>,
    pub boundary_vertices: Vec<usize>,
    pub open_vertices: Vec<usize>,
    /// `V̊`
    pub ring_vertices: Vec<usize>,
    /// `E̊`, the qubits
    pub ring_edges: Vec<usize>,
}

/// The CSS code of a surface together with its row and column maps.
#[derive(Clone, Debug)]
pub struct SurfaceCode {
    surface: Surface,
    profile: BoundaryProfile,
    /// Column of each edge, `None` for open edges.
    column: Vec<Option<usize>>,
    /// Row `i` is the vector of vertex `profile.ring_vertices[i]`.
    vertex_vectors: FpMatrix,
    /// Row `i` is the vector of face `i`, restricted to `E̊`.
    face_vectors: FpMatrix,
    css: CssCode,
}

/// Builds the CSS code of a surface.
pub fn surface_to_css(surface: &Surface) -> Result<SurfaceCode> {
    SurfaceCode::new(surface)
}

impl SurfaceCode {
    pub fn new(surface: &Surface) -> Result<Self> {
        let profile = surface.classify_boundary()?;
        let n = profile.ring_edges.len();
        let mut column = vec![None; surface.edge_ids.len()];
        for (c, &e) in profile.ring_edges.iter().enumerate() {
            column[e] = Some(c);
        }
        let m = Modulus::TWO;

        let mut vertex_vectors = FpMatrix::zeros(m, profile.ring_vertices.len(), n);
        for (r, &v) in profile.ring_vertices.iter().enumerate() {
            for (e, col) in column.iter().enumerate() {
                if let Some(c) = *col {
                    if surface.incident(v, e) {
                        vertex_vectors.set(r, c, 1);
                    }
                }
            }
        }
        let mut face_vectors = FpMatrix::zeros(m, surface.face_ids.len(), n);
        for (f, edges) in surface.face_edges.iter().enumerate() {
            for &e in edges {
                if let Some(c) = column[e] {
                    face_vectors.set(f, c, 1);
                }
            }
        }

        for (r, &v) in profile.ring_vertices.iter().enumerate() {
            for f in 0..face_vectors.rows() {
                if crate::fpalg::dot(m, vertex_vectors.row(r), face_vectors.row(f)) != 0 {
                    return Err(Error::MalformedSurface(format!(
                        "vertex {:?} and face {:?} share an odd number of qubits",
                        surface.vertex_ids[v], surface.face_ids[f]
                    )));
                }
            }
        }

        let css = CssCode::new(
            ClassicalCode::from_spanning_set(face_vectors.clone()),
            ClassicalCode::from_spanning_set(vertex_vectors.clone()),
        )?;
        Ok(SurfaceCode {
            surface: surface.clone(),
            profile,
            column,
            vertex_vectors,
            face_vectors,
            css,
        })
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    pub fn profile(&self) -> &BoundaryProfile {
        &self.profile
    }

    pub fn css(&self) -> &CssCode {
        &self.css
    }

    /// Number of physical qubits, `|E̊|`.
    pub fn n(&self) -> usize {
        self.profile.ring_edges.len()
    }

    pub fn stabilizer(&self) -> StabilizerCode {
        crate::css::css_to_stabilizer(&self.css).expect("validated CSS pair")
    }

    /// Indicator vectors of `V̊`, in declaration order.
    pub fn vertex_vectors(&self) -> &FpMatrix {
        &self.vertex_vectors
    }

    /// Indicator vectors of all faces on `E̊`, in declaration order.
    pub fn face_vectors(&self) -> &FpMatrix {
        &self.face_vectors
    }

    /// Column of an edge, `None` if it carries no qubit.
    pub fn column_of(&self, edge: usize) -> Option<usize> {
        self.column[edge]
    }

    /// Edge index of a qubit column.
    pub fn edge_of(&self, column: usize) -> usize {
        self.profile.ring_edges[column]
    }

    /// Resolves edge ids to an erasure pattern over the qubit columns.
    pub fn erasures<S: AsRef<str>>(&self, ids: &[S]) -> Result<ErasurePattern> {
        let mut cols = Vec::with_capacity(ids.len());
        for id in ids {
            let id = id.as_ref();
            let e = self
                .surface
                .edge_index(id)
                .ok_or_else(|| invalid(format!("unknown edge {id:?}")))?;
            let c = self.column[e]
                .ok_or_else(|| invalid(format!("edge {id:?} is open and carries no qubit")))?;
            cols.push(c);
        }
        ErasurePattern::new(self.n(), cols)
    }

    /// `(V̊_I, F_I)`: ring vertices incident to an erased edge and faces
    /// containing one, as indices in declaration order.
    pub fn touched_sets(&self, erasures: &ErasurePattern) -> TouchedSets {
        let erased: Vec<usize> = erasures
            .indices()
            .iter()
            .map(|&c| self.edge_of(c))
            .collect();
        let vertices = self
            .profile
            .ring_vertices
            .iter()
            .copied()
            .filter(|&v| erased.iter().any(|&e| self.surface.incident(v, e)))
            .collect();
        let faces = (0..self.surface.face_ids.len())
            .filter(|&f| {
                erased
                    .iter()
                    .any(|e| self.surface.face_edges[f].contains(e))
            })
            .collect();
        TouchedSets { vertices, faces }
    }

    /// Selects at most `|I|` vertices and `|I|` faces whose vectors span
    /// minimal `D_Z` and `D_X`.
    ///
    /// Vertex rows are eliminated in declaration order with the erased
    /// columns first; a vertex is kept when its vector restricted to the
    /// erased qubits is independent of the vertices kept before it. Exactly
    /// `dim C_Z − dim(C_Z ∩ F_2^{Ī})` vertices survive. Faces likewise.
    pub fn reduce_plan(&self, erasures: &ErasurePattern) -> Result<SurfacePlan> {
        let code = self.stabilizer();
        if !erasure_correctable(&code, erasures)? {
            let witness = correctability_witness(&code, erasures)?.unwrap_or_default();
            return Err(Error::NotCorrectable { witness });
        }
        let cols = erasures.indices();
        let vertex_rows = independent_rows_on(&self.vertex_vectors, cols);
        let face_rows = independent_rows_on(&self.face_vectors, cols);

        let mut hit = vec![false; self.n()];
        for &r in &vertex_rows {
            mark_support(&mut hit, self.vertex_vectors.row(r));
        }
        for &r in &face_rows {
            mark_support(&mut hit, self.face_vectors.row(r));
        }
        let s = &self.surface;
        let vertices: Vec<usize> = vertex_rows
            .iter()
            .map(|&r| self.profile.ring_vertices[r])
            .collect();
        let measured: Vec<usize> = (0..self.n())
            .filter(|&c| hit[c])
            .map(|c| self.edge_of(c))
            .collect();
        Ok(SurfacePlan {
            erasures: cols
                .iter()
                .map(|&c| s.edge_ids[self.edge_of(c)].clone())
                .collect(),
            faces_to_measure: face_rows.iter().map(|&f| s.face_ids[f].clone()).collect(),
            vertices_to_measure: vertices.iter().map(|&v| s.vertex_ids[v].clone()).collect(),
            measured_qubits: measured.iter().map(|&e| s.edge_ids[e].clone()).collect(),
            face_rows,
            vertex_rows,
        })
    }

    /// Stacked `(v|0)` and `(0|f)` rows for the plan's vertices and faces.
    pub fn plan_observables(&self, plan: &SurfacePlan) -> FpMatrix {
        self.css.embed(
            &self.vertex_vectors.select_rows(&plan.vertex_rows),
            &self.face_vectors.select_rows(&plan.face_rows),
        )
    }

    pub fn locality_profile(&self, delta: usize) -> Result<usize> {
        self.surface.locality_profile(delta)
    }

    pub fn locality_single(&self) -> Result<usize> {
        self.surface.locality_single()
    }
}

impl Surface {
    /// Qubit edges sharing an endpoint with edge `e`, `e` included.
    fn adjacent_ring_edges(&self, profile: &BoundaryProfile, e: usize) -> Vec<usize> {
        profile
            .ring_edges
            .iter()
            .copied()
            .filter(|&other| {
                self.edge_ends[e]
                    .iter()
                    .any(|v| self.edge_ends[other].contains(v))
            })
            .collect()
    }

    fn ring_part(&self, f: usize) -> impl Iterator<Item = usize> + '_ {
        self.face_edges[f]
            .iter()
            .copied()
            .filter(|&e| !self.open[e])
    }

    /// `r` of the `(r, δ)` locality: over every `I ⊆ E̊` with `|I| = δ`, the
    /// largest set of qubits adjacent to `I` through a vertex or a face,
    /// minus `δ − 1`.
    pub fn locality_profile(&self, delta: usize) -> Result<usize> {
        let profile = self.classify_boundary()?;
        if delta == 0 {
            return Err(invalid("delta must be at least 1"));
        }
        let ring = &profile.ring_edges;
        if delta > ring.len() {
            return Err(Error::Undefined(format!(
                "delta {delta} exceeds the {} qubits",
                ring.len()
            )));
        }
        let count = crate::stabilizer::binomial_count(ring.len(), delta);
        if count > LOCALITY_LIMIT {
            return Err(Error::TooLarge {
                what: "locality enumeration",
                size: count,
                limit: LOCALITY_LIMIT,
            });
        }
        let ne = self.edge_ids.len();
        let neighbours: Vec<Vec<usize>> = (0..ne)
            .map(|e| {
                if self.open[e] {
                    vec![]
                } else {
                    self.adjacent_ring_edges(&profile, e)
                }
            })
            .collect();
        let faces_of: Vec<Vec<usize>> = (0..ne)
            .map(|e| {
                (0..self.face_ids.len())
                    .filter(|&f| self.face_edges[f].contains(&e))
                    .collect()
            })
            .collect();

        let mut best = 0;
        let mut seen = vec![false; ne];
        for subset in ring.iter().copied().combinations(delta) {
            seen.iter_mut().for_each(|s| *s = false);
            for &e in &subset {
                for &o in &neighbours[e] {
                    seen[o] = true;
                }
                for &f in &faces_of[e] {
                    for o in self.ring_part(f) {
                        seen[o] = true;
                    }
                }
            }
            best = best.max(seen.iter().filter(|&&s| s).count());
        }
        Ok(best + 1 - delta)
    }

    /// Single-erasure locality: for each qubit edge, the smallest
    /// `|star(v) ∪ f| − 1` over an incident ring vertex `v` and a face `f`
    /// containing it, maximised over edges.
    pub fn locality_single(&self) -> Result<usize> {
        let profile = self.classify_boundary()?;
        let ring_v = &profile.ring_vertices;
        let mut worst = 0;
        for &e in &profile.ring_edges {
            let ends: Vec<usize> = self.edge_ends[e]
                .iter()
                .copied()
                .filter(|v| ring_v.contains(v))
                .unique()
                .collect();
            let faces: Vec<usize> = (0..self.face_ids.len())
                .filter(|&f| self.face_edges[f].contains(&e))
                .collect();
            if ends.is_empty() || faces.is_empty() {
                return Err(Error::Undefined(format!(
                    "edge {:?} has no closed endpoint or no face",
                    self.edge_ids[e]
                )));
            }
            let mut best = usize::MAX;
            for &v in &ends {
                for &f in &faces {
                    let mut set: Vec<usize> = profile
                        .ring_edges
                        .iter()
                        .copied()
                        .filter(|&o| self.incident(v, o))
                        .collect();
                    set.extend(self.ring_part(f));
                    set.sort_unstable();
                    set.dedup();
                    best = best.min(set.len());
                }
            }
            worst = worst.max(best - 1);
        }
        Ok(worst)
    }
}

fn mark_support(hit: &mut [bool], row: &[u32]) {
    for (h, &v) in hit.iter_mut().zip(row) {
        *h |= v != 0;
    }
}

/// Vertices and faces adjacent to an erasure set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TouchedSets {
    /// `V̊_I`, vertex indices.
    pub vertices: Vec<usize>,
    /// `F_I`, face indices.
    pub faces: Vec<usize>,
}

/// Vertices and faces to measure, with the qubits they touch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePlan {
    pub erasures: Vec<String>,
    pub faces_to_measure: Vec<String>,
    pub vertices_to_measure: Vec<String>,
    /// Union of the supports of the chosen observables, in edge order.
    pub measured_qubits: Vec<String>,
    /// Rows of [`SurfaceCode::face_vectors`] that were selected.
    pub face_rows: Vec<usize>,
    /// Rows of [`SurfaceCode::vertex_vectors`] that were selected.
    pub vertex_rows: Vec<usize>,
}

impl SurfacePlan {
    /// `(faces, vertices)` measured.
    pub fn counts(&self) -> (usize, usize) {
        (self.faces_to_measure.len(), self.vertices_to_measure.len())
    }
}

pub fn classify_boundary(surface: &Surface) -> Result<BoundaryProfile> {
    surface.classify_boundary()
}

pub fn touched_sets<S: AsRef<str>>(surface: &Surface, erasures: &[S]) -> Result<TouchedSets> {
    let code = SurfaceCode::new(surface)?;
    let pattern = code.erasures(erasures)?;
    Ok(code.touched_sets(&pattern))
}

pub fn reduce_plan<S: AsRef<str>>(surface: &Surface, erasures: &[S]) -> Result<SurfacePlan> {
    let code = SurfaceCode::new(surface)?;
    let pattern = code.erasures(erasures)?;
    code.reduce_plan(&pattern)
}

pub fn locality_profile(surface: &Surface, delta: usize) -> Result<usize> {
    surface.locality_profile(delta)
}

pub fn locality_single(surface: &Surface) -> Result<usize> {
    surface.locality_single()
}

#[cfg(test)]
mod tests;
