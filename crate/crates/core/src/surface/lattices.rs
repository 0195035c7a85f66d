use super::{EdgeSpec, FaceSpec, Surface, SurfaceSpec};
use crate::error::{invalid, Result};

/// The five-vertex, eight-edge, four-face closed surface shipped in
/// `fixtures/fig1.json`.
pub fn fig1() -> Surface {
    Surface::from_json(include_str!("../../fixtures/fig1.json")).expect("bundled fixture")
}

/// One square face with four closed boundary edges.
pub fn square() -> Surface {
    Surface::from_json(include_str!("../../fixtures/square.json")).expect("bundled fixture")
}

fn edge(id: String, a: String, b: String) -> EdgeSpec {
    EdgeSpec {
        id,
        ends: vec![a, b],
    }
}

/// The `rows × cols` square tiling of the torus.
///
/// Vertex `v{r}_{c}` meets horizontal edge `h{r}_{c}` (to `v{r}_{c+1}`) and
/// vertical edge `u{r}_{c}` (to `v{r+1}_{c}`). Face `f{r}_{c}` has corners
/// `v{r}_{c}` and `v{r+1}_{c+1}`. Both dimensions must be at least 2.
pub fn toric(rows: usize, cols: usize) -> Result<Surface> {
    if rows < 2 || cols < 2 {
        return Err(invalid("toric lattice needs at least 2 rows and 2 columns"));
    }
    let v = |r: usize, c: usize| format!("v{}_{}", r % rows, c % cols);
    let mut spec = SurfaceSpec {
        vertices: Vec::new(),
        edges: Vec::new(),
        faces: Vec::new(),
        open_edges: Vec::new(),
    };
    for r in 0..rows {
        for c in 0..cols {
            spec.vertices.push(v(r, c));
            spec.edges
                .push(edge(format!("h{r}_{c}"), v(r, c), v(r, c + 1)));
            spec.edges
                .push(edge(format!("u{r}_{c}"), v(r, c), v(r + 1, c)));
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            spec.faces.push(FaceSpec {
                id: format!("f{r}_{c}"),
                edges: vec![
                    format!("h{r}_{c}"),
                    format!("u{r}_{}", (c + 1) % cols),
                    format!("h{}_{c}", (r + 1) % rows),
                    format!("u{r}_{c}"),
                ],
            });
        }
    }
    Surface::from_spec(&spec)
}

/// A `rows × cols` patch of squares in the plane, with no open edges.
///
/// Vertices `v{r}_{c}` for `r ≤ rows`, `c ≤ cols`; edges `h{r}_{c}` and
/// `u{r}_{c}` as in [`toric`] but without wrap-around. Use
/// [`Surface::with_open_edges`] to open some of the outer edges.
pub fn planar_patch(rows: usize, cols: usize) -> Result<Surface> {
    if rows == 0 || cols == 0 {
        return Err(invalid("planar patch needs at least one face"));
    }
    let v = |r: usize, c: usize| format!("v{r}_{c}");
    let mut spec = SurfaceSpec {
        vertices: Vec::new(),
        edges: Vec::new(),
        faces: Vec::new(),
        open_edges: Vec::new(),
    };
    for r in 0..=rows {
        for c in 0..=cols {
            spec.vertices.push(v(r, c));
            if c < cols {
                spec.edges
                    .push(edge(format!("h{r}_{c}"), v(r, c), v(r, c + 1)));
            }
            if r < rows {
                spec.edges
                    .push(edge(format!("u{r}_{c}"), v(r, c), v(r + 1, c)));
            }
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            spec.faces.push(FaceSpec {
                id: format!("f{r}_{c}"),
                edges: vec![
                    format!("h{r}_{c}"),
                    format!("u{r}_{}", c + 1),
                    format!("h{}_{c}", r + 1),
                    format!("u{r}_{c}"),
                ],
            });
        }
    }
    Surface::from_spec(&spec)
}
