//! Mesh file formats: OFF and Wavefront OBJ, triangles only.

use super::surface::TriangulatedSurface;
use crate::{Error, Result};
use nalgebra::Point3;
use std::fmt::Write as _;
use std::path::Path;

/// A parsed mesh plus any records the parser skipped.
pub struct LoadedMesh {
    pub surface: TriangulatedSurface,
    pub warnings: Vec<String>,
}

/// Reads an OFF file: header `OFF`, counts line `V F E`, `V` coordinate
/// lines, then `F` face lines `n i0 i1 ... i(n-1)`. Only `n = 3` faces are
/// accepted. Comment lines (`#`) are skipped.
pub fn read_off(text: &str) -> Result<LoadedMesh> {
    let mut tokens = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        tokens.extend(line.split_whitespace().map(str::to_string));
    }
    let mut pos = 0;
    let mut next = |what: &str| -> Result<String> {
        let t = tokens
            .get(pos)
            .ok_or_else(|| Error::parse(format!("OFF data ends before {what}")))?;
        pos += 1;
        Ok(t.clone())
    };
    if next("the header")? != "OFF" {
        return Err(Error::parse("missing OFF header"));
    }
    let nv: usize = parse_num(&next("the vertex count")?, "vertex count")?;
    let nf: usize = parse_num(&next("the face count")?, "face count")?;
    let _ne: usize = parse_num(&next("the edge count")?, "edge count")?;
    let mut vertices = Vec::with_capacity(nv);
    for i in 0..nv {
        let mut c = [0.0; 3];
        for coord in &mut c {
            *coord = parse_num(&next("a coordinate")?, &format!("vertex {i}"))?;
        }
        vertices.push(Point3::new(c[0], c[1], c[2]));
    }
    let mut faces = Vec::with_capacity(nf);
    for i in 0..nf {
        let n: usize = parse_num(&next("a face size")?, &format!("face {i}"))?;
        if n != 3 {
            return Err(Error::parse(format!(
                "face {i} has {n} vertices; only triangles are supported"
            )));
        }
        let mut f = [0usize; 3];
        for v in &mut f {
            *v = parse_num(&next("a face index")?, &format!("face {i}"))?;
        }
        faces.push(f);
    }
    Ok(LoadedMesh {
        surface: TriangulatedSurface::new(vertices, faces)?,
        warnings: Vec::new(),
    })
}

/// Reads a Wavefront OBJ: `v` and `f` records, triangles only. `f` entries
/// may carry `/`-separated texture/normal indices, which are ignored.
/// Unsupported record types are collected as warnings.
pub fn read_obj(text: &str) -> Result<LoadedMesh> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    let mut warnings = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let record = parts.next().unwrap();
        match record {
            "v" => {
                let coords: Vec<f64> = parts
                    .map(|t| parse_num(t, &format!("line {}", lineno + 1)))
                    .collect::<Result<_>>()?;
                if coords.len() < 3 {
                    return Err(Error::parse(format!(
                        "line {}: vertex needs 3 coordinates",
                        lineno + 1
                    )));
                }
                vertices.push(Point3::new(coords[0], coords[1], coords[2]));
            }
            "f" => {
                let ids: Vec<usize> = parts
                    .map(|t| {
                        let first = t.split('/').next().unwrap_or("");
                        let signed: i64 = parse_num(first, &format!("line {}", lineno + 1))?;
                        // OBJ indices are 1-based; negative counts from the end.
                        let resolved = if signed < 0 {
                            vertices.len() as i64 + signed
                        } else {
                            signed - 1
                        };
                        if resolved < 0 {
                            return Err(Error::parse(format!(
                                "line {}: face index {signed} out of range",
                                lineno + 1
                            )));
                        }
                        Ok(resolved as usize)
                    })
                    .collect::<Result<_>>()?;
                if ids.len() != 3 {
                    return Err(Error::parse(format!(
                        "line {}: face has {} vertices; only triangles are supported",
                        lineno + 1,
                        ids.len()
                    )));
                }
                faces.push([ids[0], ids[1], ids[2]]);
            }
            other => warnings.push(format!(
                "line {}: skipped unsupported record '{other}'",
                lineno + 1
            )),
        }
    }
    Ok(LoadedMesh {
        surface: TriangulatedSurface::new(vertices, faces)?,
        warnings,
    })
}

fn parse_num<T: std::str::FromStr>(token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(format!("{what}: cannot parse '{token}'")))
}

pub fn write_off(mesh: &TriangulatedSurface) -> String {
    let mut out = String::from("OFF\n");
    let _ = writeln!(
        out,
        "{} {} {}",
        mesh.vertices().len(),
        mesh.faces().len(),
        mesh.edges().len()
    );
    for v in mesh.vertices() {
        let _ = writeln!(out, "{:.17} {:.17} {:.17}", v.x, v.y, v.z);
    }
    for f in mesh.faces() {
        let _ = writeln!(out, "3 {} {} {}", f[0], f[1], f[2]);
    }
    out
}

pub fn write_obj(mesh: &TriangulatedSurface) -> String {
    let mut out = String::new();
    for v in mesh.vertices() {
        let _ = writeln!(out, "v {:.17} {:.17} {:.17}", v.x, v.y, v.z);
    }
    for f in mesh.faces() {
        let _ = writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1);
    }
    out
}

/// Loads a mesh, picking the format from the extension (`.off` or `.obj`).
pub fn load_mesh(path: &Path) -> Result<LoadedMesh> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(format!("cannot read {}: {e}", path.display())))?;
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
        .as_deref()
    {
        Some("off") => read_off(&text),
        Some("obj") => read_obj(&text),
        _ => Err(Error::parse(format!(
            "cannot tell the format of {} (expected .off or .obj)",
            path.display()
        ))),
    }
}
