use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::patch::{Field, SurfaceMesh};

/// Mesh file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Ply,
    Csv,
}

impl MeshFormat {
    pub fn extension(self) -> &'static str {
        match self {
            MeshFormat::Obj => "obj",
            MeshFormat::Ply => "ply",
            MeshFormat::Csv => "csv",
        }
    }
}

impl FromStr for MeshFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(MeshFormat::Obj),
            "ply" => Ok(MeshFormat::Ply),
            "csv" => Ok(MeshFormat::Csv),
            other => Err(format!("unknown mesh format `{other}` (expected obj, ply or csv)")),
        }
    }
}

/// Header of the per-vertex CSV export.
pub const CSV_HEADER: &str = "x_re,y_im,px,py,pz,nx,ny,nz,lambda,G,K";

/// 17 significant digits, enough to round-trip any `f64`.
pub(crate) fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// Creates `path` and runs `body` on a buffered writer, attaching the path
/// to any I/O failure.
pub(crate) fn write_with<F>(path: &Path, body: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
{
    let wrap = |source| Error::Write {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(wrap)?;
    let mut w = BufWriter::new(file);
    body(&mut w).and_then(|_| w.flush()).map_err(wrap)
}

/// Writes `mesh` to `path` as OBJ, ASCII PLY or CSV.
///
/// OBJ carries positions, normals (when requested) and 1-based faces. PLY
/// carries positions, normals and the scalar properties `quality_G`,
/// `quality_K` and `lambda` as requested. CSV has one row per vertex with
/// every field. Output depends only on the mesh, so identical meshes give
/// byte-identical files.
pub fn export_mesh(mesh: &SurfaceMesh, format: MeshFormat, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    match format {
        MeshFormat::Obj => write_with(path, |w| write_obj(mesh, w)),
        MeshFormat::Ply => write_with(path, |w| write_ply(mesh, w)),
        MeshFormat::Csv => write_with(path, |w| write_csv(mesh, w)),
    }
}

fn describe(mesh: &SurfaceMesh) -> String {
    let m = &mesh.metadata;
    format!(
        "k {} domain {} {} {} {} grid {}x{} exclusion {} excluded {}",
        num(m.k),
        num(m.domain[0]),
        num(m.domain[1]),
        num(m.domain[2]),
        num(m.domain[3]),
        m.nx,
        m.ny,
        num(m.exclusion_radius),
        m.excluded
    )
}

fn write_obj(mesh: &SurfaceMesh, w: &mut impl Write) -> std::io::Result<()> {
    let normals = mesh.metadata.fields.contains(&Field::Normal);
    writeln!(w, "# monosurf {}", describe(mesh))?;
    for v in &mesh.vertices {
        writeln!(w, "v {} {} {}", num(v.pos[0]), num(v.pos[1]), num(v.pos[2]))?;
    }
    if normals {
        for v in &mesh.vertices {
            writeln!(w, "vn {} {} {}", num(v.normal[0]), num(v.normal[1]), num(v.normal[2]))?;
        }
    }
    for f in &mesh.faces {
        let [a, b, c] = f.map(|i| i + 1);
        if normals {
            writeln!(w, "f {a}//{a} {b}//{b} {c}//{c}")?;
        } else {
            writeln!(w, "f {a} {b} {c}")?;
        }
    }
    Ok(())
}

fn write_ply(mesh: &SurfaceMesh, w: &mut impl Write) -> std::io::Result<()> {
    let fields = &mesh.metadata.fields;
    let normals = fields.contains(&Field::Normal);
    let g = fields.contains(&Field::G);
    let kk = fields.contains(&Field::K);
    let lambda = fields.contains(&Field::Lambda);

    writeln!(w, "ply")?;
    writeln!(w, "format ascii 1.0")?;
    writeln!(w, "comment monosurf {}", describe(mesh))?;
    writeln!(w, "element vertex {}", mesh.vertices.len())?;
    for p in ["x", "y", "z"] {
        writeln!(w, "property double {p}")?;
    }
    if normals {
        for p in ["nx", "ny", "nz"] {
            writeln!(w, "property double {p}")?;
        }
    }
    if g {
        writeln!(w, "property double quality_G")?;
    }
    if kk {
        writeln!(w, "property double quality_K")?;
    }
    if lambda {
        writeln!(w, "property double lambda")?;
    }
    writeln!(w, "element face {}", mesh.faces.len())?;
    writeln!(w, "property list uchar int vertex_indices")?;
    writeln!(w, "end_header")?;

    for v in &mesh.vertices {
        let mut row: Vec<f64> = v.pos.to_vec();
        if normals {
            row.extend(v.normal);
        }
        if g {
            row.push(v.g_density);
        }
        if kk {
            row.push(v.gauss_curv);
        }
        if lambda {
            row.push(v.lambda);
        }
        let line: Vec<String> = row.into_iter().map(num).collect();
        writeln!(w, "{}", line.join(" "))?;
    }
    for f in &mesh.faces {
        writeln!(w, "3 {} {} {}", f[0], f[1], f[2])?;
    }
    Ok(())
}

fn write_csv(mesh: &SurfaceMesh, w: &mut impl Write) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for v in &mesh.vertices {
        let row = [
            v.u.re,
            v.u.im,
            v.pos[0],
            v.pos[1],
            v.pos[2],
            v.normal[0],
            v.normal[1],
            v.normal[2],
            v.lambda,
            v.g_density,
            v.gauss_curv,
        ];
        let line: Vec<String> = row.into_iter().map(num).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    Ok(())
}
