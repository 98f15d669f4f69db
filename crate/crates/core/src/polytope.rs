//! Exact convex-geometry kernel: hulls in arbitrary dimension, face
//! enumeration, support functions, Minkowski sums, and exact volumes.
//!
//! Inner-normal convention throughout: every facet is stored as
//! ⟨a, x⟩ ≥ b with a the canonical (primitive integer, for exact scalars)
//! inner normal, and faces in direction v minimize ⟨v, ·⟩. Supports here
//! are small point sets, so the hull is an incremental insertion that
//! merges coplanar facets exactly instead of perturbing.

use crate::matrix;
use crate::scalar::{dot, scmp, Scalar};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("cannot build a polytope from an empty point set")]
    EmptyPointSet,
    #[error("point has dimension {got}, ambient dimension is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("direction vector must be nonzero")]
    ZeroDirection,
    #[error("subpolytope is not contained in the parent")]
    NotContained,
}

/// Supporting halfspace ⟨normal, x⟩ ≥ offset, tight exactly on `vertices`.
#[derive(Clone, Debug, PartialEq)]
pub struct Facet<S> {
    pub normal: Vec<S>,
    pub offset: S,
    pub vertices: Vec<usize>,
}

/// Affine-hull equation ⟨normal, x⟩ = offset (present only when dim < n).
#[derive(Clone, Debug, PartialEq)]
pub struct AffineEquation<S> {
    pub normal: Vec<S>,
    pub offset: S,
}

/// A face of a polytope, identified by its vertex set, with a canonical
/// normal in the relative interior of its normal cone.
#[derive(Clone, Debug, PartialEq)]
pub struct Face<S> {
    pub dim: usize,
    pub normal: Vec<S>,
    pub vertices: Vec<usize>,
}

/// Classification of a face–subpolytope intersection, carrying the witness
/// face of the subpolytope.
#[derive(Clone, Debug, PartialEq)]
pub enum FaceMeet<S> {
    Empty,
    Point(Face<S>),
    PositiveDim(Face<S>),
}

/// A rational polytope with consistent V- and H-representations.
#[derive(Clone, Debug, PartialEq)]
pub struct Polytope<S: Scalar> {
    n: usize,
    dim: usize,
    vertices: Vec<Vec<S>>,
    facets: Vec<Facet<S>>,
    affine_equations: Vec<AffineEquation<S>>,
    incidence: Vec<Vec<bool>>,
}

impl<S: Scalar> Polytope<S> {
    pub fn from_points(n: usize, points: &[Vec<S>]) -> Result<Self, PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::EmptyPointSet);
        }
        for p in points {
            if p.len() != n {
                return Err(PolytopeError::DimensionMismatch {
                    expected: n,
                    got: p.len(),
                });
            }
        }
        let mut pts: Vec<Vec<S>> = points.to_vec();
        pts.sort_by(|a, b| matrix::lex_cmp(a, b));
        pts.dedup_by(|a, b| a == b);

        let base = pts[0].clone();
        let diffs: Vec<Vec<S>> = pts[1..]
            .iter()
            .map(|p| sub(p, &base))
            .collect();
        let (dir_basis, pivot_cols) = matrix::rref(&diffs);
        let dim = dir_basis.len();

        // affine-hull equations: nullspace of the direction space
        let mut affine_equations = Vec::new();
        let kernel = if dim == 0 {
            (0..n)
                .map(|k| {
                    let mut e = vec![S::zero(); n];
                    e[k] = S::one();
                    e
                })
                .collect()
        } else {
            matrix::nullspace(&dir_basis, n)
        };
        for mut a in kernel {
            S::canonicalize_direction(&mut a);
            let offset = dot(&a, &base);
            affine_equations.push(AffineEquation { normal: a, offset });
        }

        if dim == 0 {
            return Ok(Polytope {
                n,
                dim,
                vertices: vec![base],
                facets: Vec::new(),
                affine_equations,
                incidence: Vec::new(),
            });
        }

        // frame coordinates: (p - base) restricted to the pivot columns of
        // the direction basis, an affine isomorphism on the affine hull
        let frame = |p: &[S]| -> Vec<S> {
            pivot_cols
                .iter()
                .map(|&c| p[c].clone() - base[c].clone())
                .collect()
        };
        let frame_pts: Vec<Vec<S>> = pts.iter().map(|p| frame(p)).collect();

        let hull = hull_full_dim(&frame_pts, dim);

        // final vertex set: points whose containing facet normals span the
        // frame; everything else on the boundary is non-extreme
        let mut is_vertex = vec![false; pts.len()];
        for (i, v) in is_vertex.iter_mut().enumerate() {
            let normals: Vec<Vec<S>> = hull
                .iter()
                .filter(|f| f.on.contains(&i))
                .map(|f| f.normal.clone())
                .collect();
            *v = matrix::rank(&normals) == dim;
        }
        let vertex_ids: Vec<usize> =
            (0..pts.len()).filter(|&i| is_vertex[i]).collect();
        let reindex: std::collections::BTreeMap<usize, usize> = vertex_ids
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let vertices: Vec<Vec<S>> =
            vertex_ids.iter().map(|&i| pts[i].clone()).collect();

        // lift each facet back to ambient coordinates with a canonical
        // normal lying in the direction space
        let mut facets = Vec::with_capacity(hull.len());
        for hf in &hull {
            let vset: Vec<usize> = hf
                .on
                .iter()
                .filter_map(|i| reindex.get(i).copied())
                .collect();
            debug_assert!(!vset.is_empty());
            let anchor = &vertices[vset[0]];
            // normal u in the row space of dir_basis, orthogonal to the
            // facet's vertex differences
            let mut rows: Vec<Vec<S>> = vset[1..]
                .iter()
                .map(|&v| sub(&vertices[v], anchor))
                .collect();
            for eq in &affine_equations {
                rows.push(eq.normal.clone());
            }
            let kern = matrix::nullspace(&rows, n);
            debug_assert_eq!(kern.len(), 1, "facet normal must be unique");
            let mut normal = kern.into_iter().next().expect("facet normal");
            S::canonicalize_direction(&mut normal);
            let mut offset = dot(&normal, anchor);
            // orient inward: some vertex off the facet must be strictly above
            let witness = vertices
                .iter()
                .map(|v| dot(&normal, v))
                .find(|val| *val != offset);
            if let Some(w) = witness {
                if w < offset {
                    for x in normal.iter_mut() {
                        *x = S::zero() - x.clone();
                    }
                    offset = S::zero() - offset;
                }
            }
            let mut vset = vset;
            vset.sort_unstable();
            facets.push(Facet {
                normal,
                offset,
                vertices: vset,
            });
        }
        facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));

        let incidence = facets
            .iter()
            .map(|f| {
                let mut row = vec![false; vertices.len()];
                for &v in &f.vertices {
                    row[v] = true;
                }
                row
            })
            .collect();

        let p = Polytope {
            n,
            dim,
            vertices,
            facets,
            affine_equations,
            incidence,
        };
        debug_assert!(p.check_consistent());
        Ok(p)
    }

    fn check_consistent(&self) -> bool {
        for f in &self.facets {
            for (i, v) in self.vertices.iter().enumerate() {
                let val = dot(&f.normal, v);
                match scmp(&val, &f.offset) {
                    Ordering::Less => return false,
                    Ordering::Equal => {
                        if !f.vertices.contains(&i) {
                            return false;
                        }
                    }
                    Ordering::Greater => {
                        if f.vertices.contains(&i) {
                            return false;
                        }
                    }
                }
            }
        }
        for eq in &self.affine_equations {
            for v in &self.vertices {
                if dot(&eq.normal, v) != eq.offset {
                    return false;
                }
            }
        }
        true
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Intrinsic dimension: the rank of the affine span of the vertices.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<S>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet<S>] {
        &self.facets
    }

    pub fn affine_equations(&self) -> &[AffineEquation<S>] {
        &self.affine_equations
    }

    pub fn incidence(&self) -> &[Vec<bool>] {
        &self.incidence
    }

    /// min over the polytope of ⟨v, ·⟩.
    pub fn support_value(&self, v: &[S]) -> S {
        self.vertices
            .iter()
            .map(|p| dot(v, p))
            .min_by(scmp)
            .expect("polytope has vertices")
    }

    pub fn contains(&self, point: &[S]) -> bool {
        self.facets
            .iter()
            .all(|f| dot(&f.normal, point) >= f.offset)
            && self
                .affine_equations
                .iter()
                .all(|eq| dot(&eq.normal, point) == eq.offset)
    }

    /// The face minimizing ⟨v, ·⟩, with the normal stored as the canonical
    /// rescaling of v.
    pub fn face_in_direction(&self, v: &[S]) -> Result<Face<S>, PolytopeError> {
        if v.iter().all(|x| x.is_zero()) {
            return Err(PolytopeError::ZeroDirection);
        }
        let values: Vec<S> = self.vertices.iter().map(|p| dot(v, p)).collect();
        let min = values.iter().min_by(|a, b| scmp(*a, *b)).unwrap().clone();
        let vertices: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| values[i] == min)
            .collect();
        let coords: Vec<Vec<S>> = vertices.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut normal = v.to_vec();
        S::canonicalize_direction(&mut normal);
        Ok(Face {
            dim: matrix::affine_rank(&coords),
            normal,
            vertices,
        })
    }

    /// All distinct proper faces of dimension ≥ min_dim, canonically ordered
    /// by (dim, vertex set). Each normal is the reduced sum of the primitive
    /// normals of the facets containing the face, which lies in the relative
    /// interior of the face's normal cone.
    pub fn enumerate_proper_faces(&self, min_dim: usize) -> Vec<Face<S>> {
        let mut seen: std::collections::BTreeSet<Vec<usize>> = Default::default();
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for f in &self.facets {
            if seen.insert(f.vertices.clone()) {
                queue.push(f.vertices.clone());
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let current = queue[head].clone();
            head += 1;
            for f in &self.facets {
                let inter: Vec<usize> = current
                    .iter()
                    .copied()
                    .filter(|v| f.vertices.contains(v))
                    .collect();
                if !inter.is_empty() && seen.insert(inter.clone()) {
                    queue.push(inter);
                }
            }
        }
        let mut faces: Vec<Face<S>> = queue
            .into_iter()
            .map(|vset| {
                let coords: Vec<Vec<S>> =
                    vset.iter().map(|&i| self.vertices[i].clone()).collect();
                let dim = matrix::affine_rank(&coords);
                let mut normal = vec![S::zero(); self.n];
                for f in &self.facets {
                    if vset.iter().all(|v| f.vertices.contains(v)) {
                        for (k, x) in f.normal.iter().enumerate() {
                            normal[k] = normal[k].clone() + x.clone();
                        }
                    }
                }
                S::canonicalize_direction(&mut normal);
                Face {
                    dim,
                    normal,
                    vertices: vset,
                }
            })
            .filter(|f| f.dim >= min_dim)
            .collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then(a.vertices.cmp(&b.vertices)));
        faces
    }

    /// Classify F ∩ Q for a face F of self and a subpolytope Q ⊆ self.
    /// With v the face normal: empty when Q's support value exceeds the
    /// parent's, otherwise the intersection is exactly Q's face in
    /// direction v, classified by dimension.
    pub fn face_meets_subpolytope(
        &self,
        face: &Face<S>,
        q: &Polytope<S>,
    ) -> Result<FaceMeet<S>, PolytopeError> {
        for v in &q.vertices {
            if !self.contains(v) {
                return Err(PolytopeError::NotContained);
            }
        }
        let v = &face.normal;
        let hp = self.support_value(v);
        let hq = q.support_value(v);
        debug_assert!(hq >= hp);
        if hq > hp {
            return Ok(FaceMeet::Empty);
        }
        let witness = q.face_in_direction(v)?;
        if witness.dim == 0 {
            Ok(FaceMeet::Point(witness))
        } else {
            Ok(FaceMeet::PositiveDim(witness))
        }
    }

    pub fn minkowski_sum(&self, other: &Polytope<S>) -> Result<Polytope<S>, PolytopeError> {
        if self.n != other.n {
            return Err(PolytopeError::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut points = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                points.push(a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect());
            }
        }
        Polytope::from_points(self.n, &points)
    }

    pub fn translated(&self, t: &[S]) -> Result<Polytope<S>, PolytopeError> {
        let points: Vec<Vec<S>> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(t).map(|(x, y)| x.clone() + y.clone()).collect())
            .collect();
        Polytope::from_points(self.n, &points)
    }

    /// Exact Euclidean volume; zero for polytopes of dimension < n.
    /// Cones over a triangulation of each facet avoiding a reference vertex,
    /// summing |det| / n!.
    pub fn volume(&self) -> S {
        if self.dim < self.n || self.n == 0 {
            return S::zero();
        }
        let reference = &self.vertices[0];
        let mut total = S::zero();
        for facet in &self.facets {
            if facet.vertices.contains(&0) {
                continue;
            }
            let facet_coords: Vec<Vec<S>> = facet
                .vertices
                .iter()
                .map(|&i| self.vertices[i].clone())
                .collect();
            for simplex in triangulate_points(&facet_coords) {
                let rows: Vec<Vec<S>> = simplex
                    .iter()
                    .map(|&k| sub(&facet_coords[k], reference))
                    .collect();
                total = total + matrix::det(&rows).abs();
            }
        }
        let mut factorial = S::one();
        for k in 2..=self.n {
            factorial = factorial * S::from_int(k as i64);
        }
        total / factorial
    }
}

fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// Triangulation of conv(points) into simplices of (affine rank + 1)
/// vertices, as index tuples into `points`. Recursive cone construction
/// over the facets avoiding the first vertex.
pub fn triangulate_points<S: Scalar>(points: &[Vec<S>]) -> Vec<Vec<usize>> {
    let n = points[0].len();
    let p = Polytope::from_points(n, points).expect("triangulation input nonempty");
    // map hull vertices back to input indices
    let locate = |coords: &Vec<S>| -> usize {
        points
            .iter()
            .position(|q| q == coords)
            .expect("hull vertex must be an input point")
    };
    if p.dim() == 0 {
        return vec![vec![locate(&p.vertices[0])]];
    }
    let apex_local = 0usize;
    let apex_global = locate(&p.vertices[apex_local]);
    let mut out = Vec::new();
    for facet in p.facets() {
        if facet.vertices.contains(&apex_local) {
            continue;
        }
        let facet_coords: Vec<Vec<S>> = facet
            .vertices
            .iter()
            .map(|&i| p.vertices[i].clone())
            .collect();
        for sub_simplex in triangulate_points(&facet_coords) {
            let mut simplex = vec![apex_global];
            simplex.extend(sub_simplex.into_iter().map(|k| locate(&facet_coords[k])));
            out.push(simplex);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Full-dimensional incremental hull in frame coordinates.
// ---------------------------------------------------------------------------

struct HullFacet<S> {
    normal: Vec<S>,
    offset: S,
    /// indices of all tracked points lying exactly on the hyperplane
    on: Vec<usize>,
}

/// Incremental beneath-beyond hull. `pts` must be deduplicated, sorted, and
/// of affine rank exactly `r` ≥ 1 in R^r. Coplanar facets are merged
/// exactly rather than perturbed.
fn hull_full_dim<S: Scalar>(pts: &[Vec<S>], r: usize) -> Vec<HullFacet<S>> {
    if r == 1 {
        // endpoints of a segment; pts are sorted by the single coordinate
        let lo = 0;
        let hi = pts.len() - 1;
        return vec![
            HullFacet {
                normal: vec![S::one()],
                offset: pts[lo][0].clone(),
                on: vec![lo],
            },
            HullFacet {
                normal: vec![S::zero() - S::one()],
                offset: S::zero() - pts[hi][0].clone(),
                on: vec![hi],
            },
        ];
    }

    // initial simplex: r+1 affinely independent points, greedily
    let mut simplex = vec![0usize];
    for i in 1..pts.len() {
        let coords: Vec<Vec<S>> = simplex
            .iter()
            .chain(std::iter::once(&i))
            .map(|&k| pts[k].clone())
            .collect();
        if matrix::affine_rank(&coords) == simplex.len() {
            simplex.push(i);
            if simplex.len() == r + 1 {
                break;
            }
        }
    }
    debug_assert_eq!(simplex.len(), r + 1, "input must have affine rank r");

    let mut facets: Vec<HullFacet<S>> = Vec::new();
    for skip in 0..=r {
        let subset: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != skip)
            .map(|(_, &i)| i)
            .collect();
        let (normal, offset) =
            hyperplane_through(pts, &subset).expect("simplex facet is nondegenerate");
        let opposite = &pts[simplex[skip]];
        let (normal, offset) = orient_inward(normal, offset, opposite);
        facets.push(HullFacet {
            normal,
            offset,
            on: subset,
        });
    }

    let mut tracked: Vec<usize> = simplex.clone();
    for p in 0..pts.len() {
        if simplex.contains(&p) {
            continue;
        }
        insert_point(pts, &mut facets, &mut tracked, p, r);
    }
    facets
}

/// Hyperplane through the given points (affine rank r-1 required): returns
/// the canonical normal and its offset, or None when degenerate.
fn hyperplane_through<S: Scalar>(
    pts: &[Vec<S>],
    subset: &[usize],
) -> Option<(Vec<S>, S)> {
    let r = pts[0].len();
    let anchor = &pts[subset[0]];
    let rows: Vec<Vec<S>> = subset[1..]
        .iter()
        .map(|&i| sub(&pts[i], anchor))
        .collect();
    let kernel = matrix::nullspace(&rows, r);
    if kernel.len() != 1 {
        return None;
    }
    let mut normal = kernel.into_iter().next().unwrap();
    S::canonicalize_direction(&mut normal);
    let offset = dot(&normal, anchor);
    Some((normal, offset))
}

fn orient_inward<S: Scalar>(mut normal: Vec<S>, mut offset: S, inside: &[S]) -> (Vec<S>, S) {
    let val = dot(&normal, inside);
    debug_assert!(val != offset, "orientation witness lies on the hyperplane");
    if val < offset {
        for x in normal.iter_mut() {
            *x = S::zero() - x.clone();
        }
        offset = S::zero() - offset;
    }
    (normal, offset)
}

fn insert_point<S: Scalar>(
    pts: &[Vec<S>],
    facets: &mut Vec<HullFacet<S>>,
    tracked: &mut Vec<usize>,
    p: usize,
    r: usize,
) {
    #[derive(PartialEq)]
    enum Side {
        Visible,
        Coplanar,
        Hidden,
    }
    let sides: Vec<Side> = facets
        .iter()
        .map(|f| {
            let val = dot(&f.normal, &pts[p]);
            match scmp(&val, &f.offset) {
                Ordering::Less => Side::Visible,
                Ordering::Equal => Side::Coplanar,
                Ordering::Greater => Side::Hidden,
            }
        })
        .collect();
    if !sides.iter().any(|s| *s == Side::Visible) {
        // p is inside the current hull (possibly on its boundary): it can
        // never become a vertex, so it is dropped entirely
        return;
    }

    // extend coplanar facets by p; collect horizon ridges between visible
    // and kept facets
    let mut new_facets: Vec<HullFacet<S>> = Vec::new();
    for (fi, f) in facets.iter().enumerate() {
        if sides[fi] != Side::Visible {
            continue;
        }
        for (gi, g) in facets.iter().enumerate() {
            if sides[gi] == Side::Visible {
                continue;
            }
            let ridge: Vec<usize> = f
                .on
                .iter()
                .copied()
                .filter(|v| g.on.contains(v))
                .collect();
            if ridge.is_empty() {
                continue;
            }
            let coords: Vec<Vec<S>> = ridge.iter().map(|&i| pts[i].clone()).collect();
            if matrix::affine_rank(&coords) != r.saturating_sub(2) {
                continue;
            }
            let mut gen = ridge.clone();
            gen.push(p);
            let Some((normal, offset)) = hyperplane_through(pts, &gen) else {
                continue; // p lies in the ridge's affine span
            };
            // orient by a point of g off the new hyperplane
            let witness = g
                .on
                .iter()
                .map(|&i| &pts[i])
                .find(|q| dot(&normal, q) != offset);
            let Some(w) = witness else {
                continue; // new hyperplane equals g's: the coplanar extension covers it
            };
            let (normal, offset) = orient_inward(normal, offset, w);
            if new_facets
                .iter()
                .any(|nf| nf.normal == normal && nf.offset == offset)
            {
                continue;
            }
            // on-set: every tracked point exactly on the hyperplane, plus p
            let mut on: Vec<usize> = tracked
                .iter()
                .copied()
                .filter(|&i| dot(&normal, &pts[i]) == offset)
                .collect();
            on.push(p);
            on.sort_unstable();
            new_facets.push(HullFacet { normal, offset, on });
        }
    }

    // keep hidden facets unchanged and coplanar facets extended by p, unless
    // a new facet shares the hyperplane (then the new on-set already covers it)
    let mut result: Vec<HullFacet<S>> = Vec::new();
    for (fi, f) in facets.drain(..).enumerate() {
        match sides[fi] {
            Side::Visible => {}
            Side::Hidden => result.push(f),
            Side::Coplanar => {
                if !new_facets
                    .iter()
                    .any(|nf| nf.normal == f.normal && nf.offset == f.offset)
                {
                    let mut on = f.on;
                    on.push(p);
                    on.sort_unstable();
                    result.push(HullFacet {
                        normal: f.normal,
                        offset: f.offset,
                        on,
                    });
                }
            }
        }
    }
    result.extend(new_facets);
    *facets = result;
    tracked.push(p);

    debug_assert!(
        tracked.iter().all(|&i| facets
            .iter()
            .all(|f| dot(&f.normal, &pts[i]) >= f.offset)),
        "hull invariant violated after insertion"
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type QP = Polytope<BigRational>;

    fn q(v: i64) -> BigRational {
        BigRational::from_int(v)
    }

    fn pts(raw: &[&[i64]]) -> Vec<Vec<BigRational>> {
        raw.iter().map(|p| p.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn segment_from_three_points() {
        let p = QP::from_points(1, &pts(&[&[0], &[1], &[-1]])).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.vertices(), &pts(&[&[-1], &[1]])[..]);
        assert_eq!(p.facets().len(), 2);
    }

    #[test]
    fn square_with_interior_point() {
        let mut points = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        points.push(vec![
            BigRational::from_ratio(1, 2),
            BigRational::from_ratio(1, 2),
        ]);
        let p = QP::from_points(2, &points).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.volume(), q(1));
    }

    #[test]
    fn kuramoto_quadrilateral() {
        // Newt(L_1) for the 3-oscillator complete graph
        let p = QP::from_points(2, &pts(&[&[0, 0], &[1, 0], &[-1, 0], &[1, -1], &[-1, 1]]))
            .unwrap();
        assert_eq!(p.dim(), 2);
        let vs: Vec<Vec<i64>> = p
            .vertices()
            .iter()
            .map(|v| v.iter().map(|x| x.numer().try_into().unwrap()).collect())
            .collect();
        assert_eq!(vs, vec![vec![-1, 0], vec![-1, 1], vec![1, -1], vec![1, 0]]);
        assert!(p.contains(&pts(&[&[0, 0]])[0]));
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.volume(), q(2));
    }

    #[test]
    fn lower_dimensional_segment_embedded() {
        let p = QP::from_points(2, &pts(&[&[1, -1], &[-1, 1]])).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.affine_equations().len(), 1);
        assert_eq!(p.volume(), q(0));
        assert_eq!(p.support_value(&[q(1), q(0)]), q(-1));
        // facets of a segment are its endpoints
        assert_eq!(p.facets().len(), 2);
    }

    #[test]
    fn single_point_polytope() {
        let p = QP::from_points(3, &pts(&[&[2, -1, 5]])).unwrap();
        assert_eq!(p.dim(), 0);
        assert_eq!(p.vertices().len(), 1);
        assert!(p.facets().is_empty());
        assert_eq!(p.affine_equations().len(), 3);
        assert_eq!(p.volume(), q(0));
    }

    #[test]
    fn cube_face_counts() {
        let mut corners = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    corners.push(vec![q(x), q(y), q(z)]);
                }
            }
        }
        let p = QP::from_points(3, &corners).unwrap();
        assert_eq!(p.dim(), 3);
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.facets().len(), 6);
        assert_eq!(p.volume(), q(1));
        let faces = p.enumerate_proper_faces(1);
        assert_eq!(faces.len(), 18); // 12 edges + 6 facets
        let edges = faces.iter().filter(|f| f.dim == 1).count();
        assert_eq!(edges, 12);
    }

    #[test]
    fn simplex_volume() {
        let p = QP::from_points(3, &pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]))
            .unwrap();
        assert_eq!(p.volume(), BigRational::from_ratio(1, 6));
    }

    #[test]
    fn face_in_direction_examples() {
        let square = QP::from_points(2, &pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let bottom = square.face_in_direction(&[q(0), q(1)]).unwrap();
        assert_eq!(bottom.dim, 1);
        assert_eq!(bottom.vertices.len(), 2);

        let quad = QP::from_points(2, &pts(&[&[1, 0], &[-1, 0], &[1, -1], &[-1, 1]])).unwrap();
        let v = quad.face_in_direction(&[q(1), q(1)]).unwrap();
        assert_eq!(v.dim, 0);
        let idx = v.vertices[0];
        assert_eq!(quad.vertices()[idx], vec![q(-1), q(0)]);

        assert_eq!(
            square.face_in_direction(&[q(0), q(0)]),
            Err(PolytopeError::ZeroDirection)
        );
    }

    #[test]
    fn enumerate_faces_of_quadrilateral() {
        let quad = QP::from_points(2, &pts(&[&[1, 0], &[-1, 0], &[1, -1], &[-1, 1]])).unwrap();
        let faces = quad.enumerate_proper_faces(1);
        assert_eq!(faces.len(), 4);
        for f in &faces {
            // the canonical normal reproduces the face exactly
            let again = quad.face_in_direction(&f.normal).unwrap();
            assert_eq!(again.vertices, f.vertices);
        }
    }

    #[test]
    fn minkowski_sum_of_segments_is_square() {
        let a = QP::from_points(2, &pts(&[&[0, 0], &[1, 0]])).unwrap();
        let b = QP::from_points(2, &pts(&[&[0, 0], &[0, 1]])).unwrap();
        let s = a.minkowski_sum(&b).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.volume(), q(1));
        assert_eq!(s.vertices().len(), 4);
    }

    #[test]
    fn kuramoto_minkowski_octagon() {
        let p1 = QP::from_points(2, &pts(&[&[1, 0], &[-1, 0], &[1, -1], &[-1, 1]])).unwrap();
        let p2 = QP::from_points(2, &pts(&[&[0, 1], &[0, -1], &[-1, 1], &[1, -1]])).unwrap();
        let s = p1.minkowski_sum(&p2).unwrap();
        assert_eq!(s.vertices().len(), 8);
        assert_eq!(s.volume(), q(10));
    }

    #[test]
    fn hull_idempotence() {
        let quad = QP::from_points(2, &pts(&[&[1, 0], &[-1, 0], &[1, -1], &[-1, 1], &[0, 0]]))
            .unwrap();
        let again = QP::from_points(2, quad.vertices()).unwrap();
        assert_eq!(quad, again);
    }

    #[test]
    fn support_additivity_under_minkowski() {
        let p1 = QP::from_points(2, &pts(&[&[1, 0], &[-1, 0], &[1, -1], &[-1, 1]])).unwrap();
        let p2 = QP::from_points(2, &pts(&[&[0, 1], &[0, -1], &[-1, 1], &[1, -1]])).unwrap();
        let s = p1.minkowski_sum(&p2).unwrap();
        for v in [[q(1), q(1)], [q(2), q(-3)], [q(0), q(1)], [q(-5), q(2)]] {
            assert_eq!(
                s.support_value(&v),
                p1.support_value(&v) + p2.support_value(&v)
            );
        }
    }

    #[test]
    fn face_meets_subpolytope_cases() {
        // P = triangle, F = hypotenuse edge, Q = the same edge: positive-dim
        let p = QP::from_points(2, &pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let q_edge = QP::from_points(2, &pts(&[&[1, 0], &[0, 1]])).unwrap();
        let faces = p.enumerate_proper_faces(1);
        let hyp = faces
            .iter()
            .find(|f| {
                f.vertices
                    .iter()
                    .all(|&i| p.vertices()[i].iter().cloned().sum::<BigRational>() == q(1))
            })
            .unwrap();
        match p.face_meets_subpolytope(hyp, &q_edge).unwrap() {
            FaceMeet::PositiveDim(w) => assert_eq!(w.dim, 1),
            other => panic!("expected positive-dimensional meet, got {other:?}"),
        }

        // single vertex of F as Q: a point
        let q_pt = QP::from_points(2, &pts(&[&[1, 0]])).unwrap();
        match p.face_meets_subpolytope(hyp, &q_pt).unwrap() {
            FaceMeet::Point(w) => assert_eq!(w.dim, 0),
            other => panic!("expected point meet, got {other:?}"),
        }

        // Q not contained
        let outside = QP::from_points(2, &pts(&[&[5, 5]])).unwrap();
        assert_eq!(
            p.face_meets_subpolytope(hyp, &outside),
            Err(PolytopeError::NotContained)
        );
    }

    #[test]
    fn translation_invariance_of_volume() {
        let p = QP::from_points(2, &pts(&[&[1, 0], &[-1, 0], &[1, -1], &[-1, 1]])).unwrap();
        let t = [q(7), q(-3)];
        assert_eq!(p.translated(&t).unwrap().volume(), p.volume());
    }
}
