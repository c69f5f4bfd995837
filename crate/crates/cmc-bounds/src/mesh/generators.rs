//! Reference meshes: spheres, tori, a genus-2 surface, and flat pieces.

use super::surface::TriangulatedSurface;
use crate::{Error, Result};
use nalgebra::{Point3, Vector3};
use std::collections::HashMap;

/// Unit sphere from `level` midpoint subdivisions of the icosahedron, each
/// new vertex projected back to the sphere. `level` 0 is the icosahedron
/// (12 vertices); each level quadruples the face count (level 4: 2562
/// vertices, 5120 faces).
pub fn icosphere(level: u32) -> Result<TriangulatedSurface> {
    if level > 6 {
        return Err(Error::mesh(format!(
            "icosphere level {level} would have {} faces; levels above 6 are not supported",
            20u64 << (2 * level)
        )));
    }
    let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let mut vertices: Vec<Point3<f64>> = [
        (-1.0, phi, 0.0),
        (1.0, phi, 0.0),
        (-1.0, -phi, 0.0),
        (1.0, -phi, 0.0),
        (0.0, -1.0, phi),
        (0.0, 1.0, phi),
        (0.0, -1.0, -phi),
        (0.0, 1.0, -phi),
        (phi, 0.0, -1.0),
        (phi, 0.0, 1.0),
        (-phi, 0.0, -1.0),
        (-phi, 0.0, 1.0),
    ]
    .iter()
    .map(|&(x, y, z)| Point3::from(Vector3::new(x, y, z).normalize()))
    .collect();
    let mut faces: Vec<[usize; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    for _ in 0..level {
        let mut midpoint: HashMap<(usize, usize), usize> = HashMap::new();
        let mut next = Vec::with_capacity(faces.len() * 4);
        for face in &faces {
            let [a, b, c] = *face;
            let mut mid = |u: usize, v: usize| {
                let key = (u.min(v), u.max(v));
                *midpoint.entry(key).or_insert_with(|| {
                    let p = (vertices[u].coords + vertices[v].coords).normalize();
                    vertices.push(Point3::from(p));
                    vertices.len() - 1
                })
            };
            let (ab, bc, ca) = (mid(a, b), mid(b, c), mid(c, a));
            next.push([a, ab, ca]);
            next.push([ab, b, bc]);
            next.push([ca, bc, c]);
            next.push([ab, bc, ca]);
        }
        faces = next;
    }
    TriangulatedSurface::new(vertices, faces)
}

/// Torus of revolution: center circle of radius `ring` in the xy-plane,
/// tube radius `tube`, on an `nu x nv` grid with diagonal splits. Faces
/// wind outward.
pub fn torus_grid(ring: f64, tube: f64, nu: usize, nv: usize) -> Result<TriangulatedSurface> {
    if !(ring > tube && tube > 0.0) {
        return Err(Error::mesh(format!(
            "torus needs ring > tube > 0, got ring {ring}, tube {tube}"
        )));
    }
    if nu < 3 || nv < 3 {
        return Err(Error::mesh("torus grid needs at least 3 x 3 cells"));
    }
    let vertices = torus_vertices(ring, tube, nu, nv);
    let mut faces = Vec::with_capacity(2 * nu * nv);
    let id = |i: usize, j: usize| (i % nu) * nv + (j % nv);
    for i in 0..nu {
        for j in 0..nv {
            let (a, b, c, d) = (id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
            faces.push([a, b, c]);
            faces.push([a, c, d]);
        }
    }
    TriangulatedSurface::new(vertices, faces)
}

fn torus_vertices(ring: f64, tube: f64, nu: usize, nv: usize) -> Vec<Point3<f64>> {
    let mut vertices = Vec::with_capacity(nu * nv);
    for i in 0..nu {
        let u = 2.0 * std::f64::consts::PI * i as f64 / nu as f64;
        for j in 0..nv {
            let v = 2.0 * std::f64::consts::PI * j as f64 / nv as f64;
            let w = ring + tube * v.cos();
            vertices.push(Point3::new(w * u.cos(), w * u.sin(), tube * v.sin()));
        }
    }
    vertices
}

/// Genus-2 surface: the connected sum of two tori. One vertex star is
/// removed from each torus and the two hexagonal holes are joined by a
/// triangle bridge, with the second torus rotated so the holes face each
/// other.
pub fn genus_two(nu: usize, nv: usize) -> Result<TriangulatedSurface> {
    let ring = 1.0;
    let tube = 0.35;
    let torus = torus_grid(ring, tube, nu, nv)?;
    // The vertex at grid (0, 0) sits on the outer equator at
    // (ring + tube, 0, 0); punch the hole there on both copies.
    let punched = remove_vertex_star(&torus, 0)?;

    // Copy A: shifted so its hole faces +x from x = -gap/2. Copy B:
    // mirrored through the yz-plane and shifted, so its hole faces -x at
    // +gap/2. The mirror keeps corresponding hole vertices aligned across
    // the gap (a rotation would twist the bridge by half a turn).
    let gap = 1.0;
    let shift = ring + tube + gap / 2.0;
    let verts_a: Vec<Point3<f64>> = punched
        .vertices
        .iter()
        .map(|p| Point3::new(p.x - shift, p.y, p.z))
        .collect();
    let verts_b: Vec<Point3<f64>> = punched
        .vertices
        .iter()
        .map(|p| Point3::new(-p.x + shift, p.y, p.z))
        .collect();
    let n_a = verts_a.len();
    let mut vertices = verts_a;
    vertices.extend_from_slice(&verts_b);
    let mut faces = punched.faces.clone();
    // The mirror reverses orientation; flip copy B's winding to restore a
    // consistent global orientation.
    faces.extend(punched.faces.iter().map(|f| [f[0] + n_a, f[2] + n_a, f[1] + n_a]));

    // Bridge the two hole cycles, pairing vertices straight across the
    // gap. The annulus between the rings traverses ring A forward and
    // ring B backward, matching the leftover winding of both copies.
    let ring_a = punched.hole_cycle.clone();
    let ring_b: Vec<usize> = punched.hole_cycle.iter().map(|&v| v + n_a).collect();
    let m = ring_a.len();
    for k in 0..m {
        let (a0, a1) = (ring_a[k], ring_a[(k + 1) % m]);
        let (b0, b1) = (ring_b[k], ring_b[(k + 1) % m]);
        faces.push([a0, a1, b0]);
        faces.push([a1, b1, b0]);
    }
    TriangulatedSurface::new(vertices, faces)
}

struct PuncturedMesh {
    vertices: Vec<Point3<f64>>,
    faces: Vec<[usize; 3]>,
    /// Hole boundary in the cycle order the remaining surface induces.
    hole_cycle: Vec<usize>,
}

fn remove_vertex_star(mesh: &TriangulatedSurface, v: usize) -> Result<PuncturedMesh> {
    let mut faces: Vec<[usize; 3]> = Vec::new();
    // Directed hole edges: a removed face [v, a, b] leaves the directed
    // edge b -> a on the hole rim as seen from the remaining surface
    // (which traverses a -> b through the removed face's neighbor).
    let mut succ: HashMap<usize, usize> = HashMap::new();
    for face in mesh.faces() {
        if face.contains(&v) {
            let k = face.iter().position(|&x| x == v).unwrap();
            let a = face[(k + 1) % 3];
            let b = face[(k + 2) % 3];
            succ.insert(a, b);
        } else {
            faces.push(*face);
        }
    }
    if succ.is_empty() {
        return Err(Error::mesh(format!("vertex {v} has no incident faces")));
    }
    // Walk the cycle.
    let start = *succ.keys().next().unwrap();
    let mut hole_cycle = vec![start];
    let mut cur = succ[&start];
    while cur != start {
        hole_cycle.push(cur);
        cur = *succ
            .get(&cur)
            .ok_or_else(|| Error::mesh("vertex star boundary is not a single cycle"))?;
    }
    if hole_cycle.len() != succ.len() {
        return Err(Error::mesh("vertex star boundary is not a single cycle"));
    }
    // Drop the removed vertex, remapping indices above it.
    let remap = |i: usize| if i > v { i - 1 } else { i };
    let vertices: Vec<Point3<f64>> = mesh
        .vertices()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, p)| *p)
        .collect();
    Ok(PuncturedMesh {
        vertices,
        faces: faces.iter().map(|f| f.map(remap)).collect(),
        hole_cycle: hole_cycle.iter().map(|&i| remap(i)).collect(),
    })
}

/// Flat unit disk in the z = 0 plane: `rings` concentric rings with `6 k`
/// vertices on ring `k`, triangulated between consecutive rings.
pub fn flat_disk(rings: usize) -> Result<TriangulatedSurface> {
    if rings < 1 {
        return Err(Error::mesh("disk needs at least one ring"));
    }
    let mut vertices = vec![Point3::new(0.0, 0.0, 0.0)];
    let mut ring_start = vec![0usize];
    for k in 1..=rings {
        ring_start.push(vertices.len());
        let r = k as f64 / rings as f64;
        let n = 6 * k;
        for s in 0..n {
            let t = 2.0 * std::f64::consts::PI * s as f64 / n as f64;
            vertices.push(Point3::new(r * t.cos(), r * t.sin(), 0.0));
        }
    }
    let mut faces = Vec::new();
    // Innermost ring: a fan around the center.
    for s in 0..6 {
        faces.push([0, 1 + s, 1 + (s + 1) % 6]);
    }
    // Between ring k (6k vertices) and ring k+1 (6(k+1) vertices): walk
    // both rings by angle, advancing whichever ring's next corner comes
    // first. This emits 6(2k+1) triangles.
    for k in 1..rings {
        let (inner_n, outer_n) = (6 * k, 6 * (k + 1));
        let inner = |s: usize| ring_start[k] + s % inner_n;
        let outer = |s: usize| ring_start[k + 1] + s % outer_n;
        let (mut i, mut o) = (0usize, 0usize);
        while i < inner_n || o < outer_n {
            let inner_angle = (i + 1) as f64 / inner_n as f64;
            let outer_angle = (o + 1) as f64 / outer_n as f64;
            if o < outer_n && (outer_angle <= inner_angle || i == inner_n) {
                faces.push([inner(i), outer(o), outer(o + 1)]);
                o += 1;
            } else {
                faces.push([inner(i), outer(o), inner(i + 1)]);
                i += 1;
            }
        }
    }
    TriangulatedSurface::new(vertices, faces)
}

/// Flat unit square, two triangles, in the z = 0 plane.
pub fn unit_square() -> TriangulatedSurface {
    TriangulatedSurface::new(
        vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(1.0, 1.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
        ],
        vec![[0, 1, 2], [0, 2, 3]],
    )
    .expect("square is a valid mesh")
}
