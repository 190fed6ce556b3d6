//! Reproduce the two figure domains as OBJ meshes in a target directory.
//!
//!     cargo run --release --example figure_meshes -- out/

use monosurf::io::{export_mesh, sample_patch, FigurePreset, MeshFormat};
use monosurf::moduli::MonopoleModuli;

fn main() -> monosurf::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "figures".into());
    std::fs::create_dir_all(&dir)?;
    for (name, preset, nx, ny) in [
        ("fig1", FigurePreset::Fig1, 400, 40),
        ("fig2", FigurePreset::Fig2, 40, 400),
    ] {
        let spec = preset.spec(nx, ny)?;
        let m = MonopoleModuli::new(spec.k)?;
        let mesh = sample_patch(&spec, &m)?;
        let path = format!("{dir}/{name}.obj");
        export_mesh(&mesh, MeshFormat::Obj, &path)?;
        println!(
            "{path}: k = {}, {} vertices, {} faces, {} excluded",
            spec.k,
            mesh.vertices.len(),
            mesh.faces.len(),
            mesh.metadata.excluded
        );
    }
    Ok(())
}
