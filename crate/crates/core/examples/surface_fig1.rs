//! The five-vertex projective-plane surface code: touched sets versus the
//! reduced plan for every single-edge erasure.

use qudit_erasure::surface::{fig1, SurfaceCode};

fn main() -> Result<(), qudit_erasure::error::Error> {
    let surface = fig1();
    let code = SurfaceCode::new(&surface)?;
    let stab = code.stabilizer();
    println!(
        "{} qubits, {} vertices, {} faces, dim C = {}, k = {}",
        code.n(),
        surface.vertex_ids().len(),
        surface.face_ids().len(),
        stab.dim(),
        stab.k()
    );
    for edge in surface.edge_ids() {
        let pattern = code.erasures(&[edge])?;
        let touched = code.touched_sets(&pattern);
        let plan = code.reduce_plan(&pattern)?;
        println!(
            "{edge}: touched {}+{}, reduced faces {:?} vertices {:?} on {:?}",
            touched.faces.len(),
            touched.vertices.len(),
            plan.faces_to_measure,
            plan.vertices_to_measure,
            plan.measured_qubits
        );
    }
    Ok(())
}
