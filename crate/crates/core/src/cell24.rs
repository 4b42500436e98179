//! The ideal regular 24-cell and its characteristic orthoscheme.
//!
//! Vertices are labelled `A1..A24` (1-based in every public interface).
//! All combinatorics are derived from the coordinates: two vertices are
//! `k`-neighbours according to the spatial dot product of their unit
//! direction vectors (`1/2, 0, -1/2, -1` for `k = 1, 2, 3, 4`), faces are
//! mutually adjacent triples and facets are the octahedra found by
//! exhaustive search.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::horoball::{geodesic_intersection, horosphere_through};
use crate::lorentz::{foot_on_line, HyperplaneForm, ProjectivePoint, Vec5};

pub const VERTEX_COUNT: usize = 24;

/// Characteristic simplices around one vertex (order of the vertex stabilizer).
pub const SECTORS_PER_VERTEX: usize = 48;

const DOT_TOL: f64 = 1e-9;

const R: f64 = std::f64::consts::FRAC_1_SQRT_2;

// Spatial parts of A1..A24.
const VERTEX_TABLE: [[f64; 4]; VERTEX_COUNT] = [
    [R, R, 0.0, 0.0],
    [R, -R, 0.0, 0.0],
    [R, 0.0, R, 0.0],
    [-R, 0.0, R, 0.0],
    [R, 0.0, 0.0, R],
    [-R, 0.0, 0.0, R],
    [0.0, R, R, 0.0],
    [0.0, -R, R, 0.0],
    [0.0, R, 0.0, R],
    [0.0, -R, 0.0, R],
    [0.0, 0.0, R, R],
    [0.0, 0.0, -R, R],
    [-R, -R, 0.0, 0.0],
    [-R, R, 0.0, 0.0],
    [-R, 0.0, -R, 0.0],
    [R, 0.0, -R, 0.0],
    [-R, 0.0, 0.0, -R],
    [R, 0.0, 0.0, -R],
    [0.0, -R, -R, 0.0],
    [0.0, R, -R, 0.0],
    [0.0, -R, 0.0, -R],
    [0.0, R, 0.0, -R],
    [0.0, 0.0, -R, -R],
    [0.0, 0.0, R, -R],
];

/// Complete flag `vertex < edge < face < facet` of the 24-cell; each one
/// determines a characteristic simplex with the cell center as last vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub vertex: usize,
    pub edge: [usize; 2],
    pub face: [usize; 3],
    pub facet: usize,
}

#[derive(Debug, Clone)]
pub struct Cell24 {
    vertices: Vec<ProjectivePoint>,
    edges: Vec<[usize; 2]>,
    faces: Vec<[usize; 3]>,
    facets: Vec<[usize; 6]>,
    classes: [[u8; VERTEX_COUNT]; VERTEX_COUNT],
}

fn spatial_dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn class_from_dot(d: f64) -> u8 {
    // unit vectors: |a|^2 = 1/2 + 1/2 = 1
    if (d - 0.5).abs() < DOT_TOL {
        1
    } else if d.abs() < DOT_TOL {
        2
    } else if (d + 0.5).abs() < DOT_TOL {
        3
    } else if (d + 1.0).abs() < DOT_TOL {
        4
    } else {
        0
    }
}

impl Cell24 {
    pub fn build() -> Self {
        let vertices = VERTEX_TABLE
            .iter()
            .map(|s| ProjectivePoint::new([1.0, s[0], s[1], s[2], s[3]]).expect("nonzero"))
            .collect();

        let mut classes = [[0u8; VERTEX_COUNT]; VERTEX_COUNT];
        for i in 0..VERTEX_COUNT {
            for j in 0..VERTEX_COUNT {
                if i != j {
                    classes[i][j] = class_from_dot(spatial_dot(&VERTEX_TABLE[i], &VERTEX_TABLE[j]));
                }
            }
        }

        let adjacent = |i: usize, j: usize| classes[i][j] == 1;
        let mut edges = Vec::new();
        let mut faces = Vec::new();
        for i in 0..VERTEX_COUNT {
            for j in i + 1..VERTEX_COUNT {
                if !adjacent(i, j) {
                    continue;
                }
                edges.push([i + 1, j + 1]);
                for k in j + 1..VERTEX_COUNT {
                    if adjacent(i, k) && adjacent(j, k) {
                        faces.push([i + 1, j + 1, k + 1]);
                    }
                }
            }
        }

        let mut facets = Vec::new();
        let mut current = Vec::with_capacity(6);
        search_octahedra(&classes, 0, &mut current, &mut facets);

        Self { vertices, edges, faces, facets, classes }
    }

    pub fn vertices(&self) -> &[ProjectivePoint] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Result<&ProjectivePoint> {
        check_index(i)?;
        Ok(&self.vertices[i - 1])
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn facets(&self) -> &[[usize; 6]] {
        &self.facets
    }

    pub fn neighbor_class(&self, i: usize, j: usize) -> Result<u8> {
        check_index(i)?;
        check_index(j)?;
        if i == j {
            return Err(Error::SameIndex(i));
        }
        Ok(self.classes[i - 1][j - 1])
    }

    /// Vertices in class `k` relative to `i`, ascending.
    pub fn neighbors(&self, i: usize, k: u8) -> Result<Vec<usize>> {
        check_index(i)?;
        Ok((1..=VERTEX_COUNT).filter(|&j| j != i && self.classes[i - 1][j - 1] == k).collect())
    }

    pub fn class_matrix(&self) -> Vec<Vec<u8>> {
        self.classes.iter().map(|row| row.to_vec()).collect()
    }

    /// Index of the facet with the given vertex set (any order).
    pub fn facet_index(&self, facet: &[usize]) -> Result<usize> {
        let mut key = facet.to_vec();
        key.sort_unstable();
        self.facets
            .iter()
            .position(|f| f[..] == key[..])
            .ok_or_else(|| Error::NotAFacet(facet.to_vec()))
    }

    pub fn facet_center(&self, facet: &[usize]) -> Result<ProjectivePoint> {
        let idx = self.facet_index(facet)?;
        self.average(&self.facets[idx])
    }

    pub fn edge_midpoint(&self, i: usize, j: usize) -> Result<ProjectivePoint> {
        if self.neighbor_class(i, j)? != 1 {
            return Err(Error::NotAnEdge(i, j));
        }
        self.average(&[i, j])
    }

    pub fn face_center(&self, face: &[usize; 3]) -> Result<ProjectivePoint> {
        for (a, b) in [(face[0], face[1]), (face[0], face[2]), (face[1], face[2])] {
            if self.neighbor_class(a, b)? != 1 {
                return Err(Error::NotAnEdge(a, b));
            }
        }
        self.average(face)
    }

    // Coordinate average; all vertices share x0 = 1.
    fn average(&self, idx: &[usize]) -> Result<ProjectivePoint> {
        let mut sum = Vec5::zeros();
        for &i in idx {
            sum += self.vertex(i)?.coords();
        }
        ProjectivePoint::from_vector(sum / idx.len() as f64)
    }

    /// Hyperplane of facet `idx` (index into [`Cell24::facets`]), with the
    /// normal pointing toward the cell center.
    pub fn facet_hyperplane(&self, idx: usize) -> Result<HyperplaneForm> {
        let facet = self.facets.get(idx).ok_or_else(|| Error::NotAFacet(vec![idx]))?;
        let pts: Vec<ProjectivePoint> = facet.iter().map(|&i| self.vertices[i - 1]).collect();
        Ok(HyperplaneForm::through_points(&pts)?.oriented_toward(&cell_center()))
    }

    /// Facets (indices) containing vertex `i`.
    pub fn facets_at(&self, i: usize) -> Vec<usize> {
        (0..self.facets.len()).filter(|&f| self.facets[f].contains(&i)).collect()
    }

    /// The 48 complete flags starting at vertex `i`.
    pub fn flags_at(&self, i: usize) -> Result<Vec<Flag>> {
        check_index(i)?;
        let mut flags = Vec::with_capacity(SECTORS_PER_VERTEX);
        for e in self.edges.iter().filter(|e| e.contains(&i)) {
            for f in self.faces.iter().filter(|f| f.contains(&e[0]) && f.contains(&e[1])) {
                for (k, facet) in self.facets.iter().enumerate() {
                    if f.iter().all(|v| facet.contains(v)) {
                        flags.push(Flag { vertex: i, edge: *e, face: *f, facet: k });
                    }
                }
            }
        }
        Ok(flags)
    }

    /// Proper vertices `T1..T4` of the characteristic simplex of `flag`
    /// (edge midpoint, face center, facet center, cell center).
    pub fn flag_simplex(&self, flag: &Flag) -> Result<[ProjectivePoint; 4]> {
        Ok([
            self.edge_midpoint(flag.edge[0], flag.edge[1])?,
            self.face_center(&flag.face)?,
            self.average(&self.facets[flag.facet])?,
            cell_center(),
        ])
    }

    pub fn characteristic_simplex(&self) -> CharacteristicSimplex {
        let pts = self.special_points();
        CharacteristicSimplex {
            t0: pts.t0,
            t1: pts.t1,
            t2: pts.t2,
            t3: pts.t3,
            t4: pts.t4,
            t: pts.t,
        }
    }

    /// Named points of the construction.
    pub fn special_points(&self) -> SpecialPoints {
        let a = |i: usize| self.vertices[i - 1];
        let t0 = a(1);
        let t1 = self.edge_midpoint(1, 3).expect("A1A3 is an edge");
        let t2 = self.face_center(&[1, 3, 7]).expect("A1A3A7 is a face");
        let t3 = self.facet_center(&[1, 3, 5, 7, 9, 11]).expect("facet");
        let t4 = cell_center();
        let t = self.edge_midpoint(3, 7).expect("A3A7 is an edge");
        let h = ProjectivePoint::from_vector((a(1).coords() + a(10).coords()) / 2.0).expect("nonzero");
        let q = foot_on_line(&t, &a(1), &a(10)).expect("line A1A10 meets the model");

        // Horoballs at A1 through T1 (B0), T3 (B1) and T (touching the facet at T).
        let b0 = horosphere_through(&t0, &t1).expect("T1 is proper");
        let b1 = horosphere_through(&t0, &t3).expect("T3 is proper");
        let b2 = horosphere_through(&t0, &t).expect("T is proper");
        let toward = |j: usize| ProjectivePoint::lerp(&t0, &a(j), 0.99).expect("nonzero");
        let hit = |b, p: ProjectivePoint| geodesic_intersection(b, &p).expect("endpoint outside");
        let i1 = hit(&b1, toward(3));
        let i2 = hit(&b1, t);
        let i3 = hit(&b2, toward(11));
        let i5 = hit(&b2, toward(10));
        let i6 = hit(&b0, t);

        SpecialPoints { t0, t1, t2, t3, t4, t, q, h, i0: t1, i1, i2, i3, i5, i6 }
    }
}

impl Default for Cell24 {
    fn default() -> Self {
        Self::build()
    }
}

pub fn build_cell24() -> Cell24 {
    Cell24::build()
}

/// Process-wide instance, built on first use.
pub fn shared() -> &'static Cell24 {
    static CELL: std::sync::OnceLock<Cell24> = std::sync::OnceLock::new();
    CELL.get_or_init(Cell24::build)
}

/// Center of the cell, which is the center of the model.
pub fn cell_center() -> ProjectivePoint {
    ProjectivePoint::new([1.0, 0.0, 0.0, 0.0, 0.0]).expect("nonzero")
}

fn check_index(i: usize) -> Result<()> {
    if (1..=VERTEX_COUNT).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(i))
    }
}

// Six vertices pairwise in class 1 or 2 whose class-2 pairs are three
// disjoint diagonals.
fn search_octahedra(
    classes: &[[u8; VERTEX_COUNT]; VERTEX_COUNT],
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<[usize; 6]>,
) {
    if current.len() == 6 {
        let mut diagonal_degree = [0usize; 6];
        for a in 0..6 {
            for b in 0..6 {
                if a != b && classes[current[a]][current[b]] == 2 {
                    diagonal_degree[a] += 1;
                }
            }
        }
        if diagonal_degree.iter().all(|&d| d == 1) {
            let mut f = [0usize; 6];
            for (slot, &v) in f.iter_mut().zip(current.iter()) {
                *slot = v + 1;
            }
            out.push(f);
        }
        return;
    }
    for v in start..VERTEX_COUNT {
        if current.iter().all(|&u| matches!(classes[u][v], 1 | 2)) {
            current.push(v);
            search_octahedra(classes, v + 1, current, out);
            current.pop();
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicSimplex {
    pub t0: ProjectivePoint,
    pub t1: ProjectivePoint,
    pub t2: ProjectivePoint,
    pub t3: ProjectivePoint,
    pub t4: ProjectivePoint,
    /// Foot of `A1` on the octahedral facet `A3 A4 A7 A8 A11 A24`.
    pub t: ProjectivePoint,
}

/// Named points. The `i*` points are horosphere crossings at `A1`:
/// `i0 = T1`; `i1` on `A1A3` and `i2` on `A1T` for the ball through `T3`;
/// `i3` on `A1A11` and `i5` (= `K`) on `A1A10` for the ball through `T`;
/// `i6` on `A1T` for the ball through `T1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialPoints {
    pub t0: ProjectivePoint,
    pub t1: ProjectivePoint,
    pub t2: ProjectivePoint,
    pub t3: ProjectivePoint,
    pub t4: ProjectivePoint,
    pub t: ProjectivePoint,
    pub q: ProjectivePoint,
    pub h: ProjectivePoint,
    pub i0: ProjectivePoint,
    pub i1: ProjectivePoint,
    pub i2: ProjectivePoint,
    pub i3: ProjectivePoint,
    pub i5: ProjectivePoint,
    pub i6: ProjectivePoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VolumeConstants {
    pub vol_f24: f64,
    pub vol_p24: f64,
    pub simplex_count: usize,
}

/// Orthoscheme volume `pi^2/864` (literature value) and the cell volume.
pub fn cell_volume_constants() -> VolumeConstants {
    let simplex_count = VERTEX_COUNT * SECTORS_PER_VERTEX;
    VolumeConstants { vol_f24: PI * PI / 864.0, vol_p24: 4.0 * PI * PI / 3.0, simplex_count }
}
