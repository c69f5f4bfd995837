//! Triangulated surfaces immersed in flat 3-space.

use crate::{Error, Result};
use nalgebra::{Point3, Vector3};
use std::collections::HashMap;

/// An immersed triangle mesh. Construction validates that the face list
/// describes a manifold surface: every face references distinct existing
/// vertices, no triangle is degenerate, every edge lies in at most two
/// faces, and the winding of neighboring faces is consistent (so closed
/// meshes are oriented). The ambient space is flat: sectional curvature 0
/// and `Ric(N) = 0` enter the Jacobi operator as a zero term.
#[derive(Clone, Debug)]
pub struct TriangulatedSurface {
    vertices: Vec<Point3<f64>>,
    faces: Vec<[usize; 3]>,
    /// Undirected edges as sorted vertex pairs.
    edges: Vec<(usize, usize)>,
    /// Edges that belong to exactly one face.
    boundary_edges: Vec<(usize, usize)>,
    components: usize,
}

impl TriangulatedSurface {
    pub fn new(vertices: Vec<Point3<f64>>, faces: Vec<[usize; 3]>) -> Result<Self> {
        if vertices.is_empty() || faces.is_empty() {
            return Err(Error::mesh("mesh needs at least one vertex and one face"));
        }
        for v in &vertices {
            if !(v.coords.iter().all(|c| c.is_finite())) {
                return Err(Error::mesh("vertex coordinates must be finite"));
            }
        }
        let scale = vertices
            .iter()
            .map(|v| v.coords.norm())
            .fold(0.0_f64, f64::max)
            .max(1e-30);
        // Map each undirected edge to the list of (face, traversal direction).
        let mut edge_faces: HashMap<(usize, usize), Vec<(usize, bool)>> = HashMap::new();
        for (f, face) in faces.iter().enumerate() {
            let [a, b, c] = *face;
            if a == b || b == c || a == c {
                return Err(Error::mesh(format!("face {f} repeats a vertex")));
            }
            for &v in face {
                if v >= vertices.len() {
                    return Err(Error::mesh(format!(
                        "face {f} references missing vertex {v}"
                    )));
                }
            }
            let area2 = (vertices[b] - vertices[a])
                .cross(&(vertices[c] - vertices[a]))
                .norm();
            if area2 <= 1e-14 * scale * scale {
                return Err(Error::mesh(format!("face {f} is degenerate (zero area)")));
            }
            for (u, v) in [(a, b), (b, c), (c, a)] {
                let key = (u.min(v), u.max(v));
                edge_faces.entry(key).or_default().push((f, u < v));
            }
        }
        let mut edges = Vec::with_capacity(edge_faces.len());
        let mut boundary_edges = Vec::new();
        for (&key, incident) in &edge_faces {
            match incident.len() {
                1 => boundary_edges.push(key),
                2 => {
                    // A consistently wound surface traverses a shared edge
                    // in opposite directions from its two faces.
                    if incident[0].1 == incident[1].1 {
                        return Err(Error::mesh(format!(
                            "faces {} and {} wind edge ({}, {}) the same way",
                            incident[0].0, incident[1].0, key.0, key.1
                        )));
                    }
                }
                n => {
                    return Err(Error::mesh(format!(
                        "edge ({}, {}) lies in {n} faces; surface is not manifold",
                        key.0, key.1
                    )));
                }
            }
            edges.push(key);
        }
        edges.sort_unstable();
        boundary_edges.sort_unstable();
        let components = count_components(vertices.len(), &edges);
        Ok(TriangulatedSurface {
            vertices,
            faces,
            edges,
            boundary_edges,
            components,
        })
    }

    pub fn vertices(&self) -> &[Point3<f64>] {
        &self.vertices
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn boundary_edges(&self) -> &[(usize, usize)] {
        &self.boundary_edges
    }

    /// Vertices lying on at least one boundary edge.
    pub fn boundary_vertices(&self) -> Vec<bool> {
        let mut on_boundary = vec![false; self.vertices.len()];
        for &(u, v) in &self.boundary_edges {
            on_boundary[u] = true;
            on_boundary[v] = true;
        }
        on_boundary
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_edges.is_empty()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components == 1
    }

    pub fn face_area(&self, f: usize) -> f64 {
        let [a, b, c] = self.faces[f];
        0.5 * (self.vertices[b] - self.vertices[a])
            .cross(&(self.vertices[c] - self.vertices[a]))
            .norm()
    }

    pub fn face_normal(&self, f: usize) -> Vector3<f64> {
        let [a, b, c] = self.faces[f];
        (self.vertices[b] - self.vertices[a])
            .cross(&(self.vertices[c] - self.vertices[a]))
            .normalize()
    }

    /// Total surface area: the sum of the triangle areas.
    pub fn area(&self) -> f64 {
        (0..self.faces.len()).map(|f| self.face_area(f)).sum()
    }

    /// Longest edge length; the resolution scale `h` of the mesh.
    pub fn max_edge_length(&self) -> f64 {
        self.edges
            .iter()
            .map(|&(u, v)| (self.vertices[u] - self.vertices[v]).norm())
            .fold(0.0, f64::max)
    }

    /// Euler characteristic `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Genus of a closed connected oriented surface, `(2 - chi) / 2`.
    pub fn genus(&self) -> Result<u64> {
        if !self.is_closed() {
            return Err(Error::mesh(
                "genus is defined here for closed meshes only; this one has boundary",
            ));
        }
        if !self.is_connected() {
            return Err(Error::mesh(format!(
                "genus needs a connected mesh; found {} components",
                self.components
            )));
        }
        let chi = self.euler_characteristic();
        if chi % 2 != 0 || chi > 2 {
            return Err(Error::mesh(format!(
                "closed oriented surface cannot have Euler characteristic {chi}"
            )));
        }
        Ok(((2 - chi) / 2) as u64)
    }

    /// Area-weighted vertex normals (consistent with face winding).
    pub fn vertex_normals(&self) -> Vec<Vector3<f64>> {
        let mut normals = vec![Vector3::zeros(); self.vertices.len()];
        for face in &self.faces {
            let [a, b, c] = *face;
            let weighted = (self.vertices[b] - self.vertices[a])
                .cross(&(self.vertices[c] - self.vertices[a]));
            normals[a] += weighted;
            normals[b] += weighted;
            normals[c] += weighted;
        }
        for n in &mut normals {
            let len = n.norm();
            if len > 0.0 {
                *n /= len;
            }
        }
        normals
    }

    /// One-ring vertex neighbors, per vertex.
    pub fn vertex_neighbors(&self) -> Vec<Vec<usize>> {
        let mut nbrs = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        nbrs
    }

    /// Sum over vertices of `2 pi - (incident angles)`; for interior
    /// vertices this is the discrete Gaussian curvature measure, and over
    /// a closed mesh the total equals `2 pi chi` up to rounding.
    pub fn total_angle_defect(&self) -> f64 {
        let mut angle_sum = vec![0.0_f64; self.vertices.len()];
        for face in &self.faces {
            for k in 0..3 {
                let v = face[k];
                let p = self.vertices[v];
                let u = self.vertices[face[(k + 1) % 3]] - p;
                let w = self.vertices[face[(k + 2) % 3]] - p;
                angle_sum[v] += (u.dot(&w) / (u.norm() * w.norm())).clamp(-1.0, 1.0).acos();
            }
        }
        let on_boundary = self.boundary_vertices();
        angle_sum
            .iter()
            .enumerate()
            .map(|(v, &s)| {
                // Boundary vertices contribute pi - angle sum (geodesic
                // curvature concentrated at the corner).
                if on_boundary[v] {
                    std::f64::consts::PI - s
                } else {
                    2.0 * std::f64::consts::PI - s
                }
            })
            .sum()
    }

    /// Splits every triangle into four at the edge midpoints. Positions are
    /// linear (no reprojection), so the carrier geometry is unchanged.
    pub fn subdivided_midpoint(&self) -> TriangulatedSurface {
        let mut vertices = self.vertices.clone();
        let mut midpoint: HashMap<(usize, usize), usize> = HashMap::new();
        let mut faces = Vec::with_capacity(self.faces.len() * 4);
        for face in &self.faces {
            let [a, b, c] = *face;
            let mut mid = |u: usize, v: usize| {
                let key = (u.min(v), u.max(v));
                *midpoint.entry(key).or_insert_with(|| {
                    vertices.push(Point3::from(
                        (vertices[u].coords + vertices[v].coords) / 2.0,
                    ));
                    vertices.len() - 1
                })
            };
            let (ab, bc, ca) = (mid(a, b), mid(b, c), mid(c, a));
            faces.push([a, ab, ca]);
            faces.push([ab, b, bc]);
            faces.push([ca, bc, c]);
            faces.push([ab, bc, ca]);
        }
        TriangulatedSurface::new(vertices, faces)
            .expect("midpoint subdivision preserves validity")
    }

    /// Uniformly scaled copy (positions multiplied by `s > 0`).
    pub fn scaled(&self, s: f64) -> Result<TriangulatedSurface> {
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::mesh(format!("scale factor must be positive, got {s}")));
        }
        TriangulatedSurface::new(
            self.vertices.iter().map(|v| Point3::from(v.coords * s)).collect(),
            self.faces.clone(),
        )
    }
}

fn count_components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    components
}
