//! Planar and spatial primitives: points, polygons with holes, hole
//! bridging, ear-clipping triangulation, and the vertex 3-coloring used to
//! place gallery-style guards.
//!
//! Coordinates are double-precision meters. Predicates use an epsilon of
//! 1e-9 m and the convention that boundary points count as inside.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// Geometric predicate epsilon in meters.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("ring has {0} vertices, need at least 3")]
    DegenerateRing(usize),
    #[error("ring is self-intersecting")]
    SelfIntersecting,
    #[error("hole {0} is not strictly inside the outer ring")]
    HoleOutsideOuter(usize),
    #[error("holes {0} and {1} overlap")]
    HolesOverlap(usize, usize),
    #[error("no crossing-free bridge diagonal found for hole {0}")]
    NoBridge(usize),
    #[error("no ear found; polygon is degenerate or self-intersecting")]
    NoEar,
    #[error("triangulation dual graph is not a tree; cannot 3-color greedily")]
    DualNotTree,
    #[error("mesh edge shared by more than two triangles")]
    InconsistentEdges,
}

/// Planar point in meters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Point2 {
    fn from(v: [f64; 2]) -> Self {
        Self { x: v[0], y: v[1] }
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Spatial point in meters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<[f64; 3]> for Point3 {
    fn from(v: [f64; 3]) -> Self {
        Self {
            x: v[0],
            y: v[1],
            z: v[2],
        }
    }
}

impl From<Point3> for [f64; 3] {
    fn from(p: Point3) -> Self {
        [p.x, p.y, p.z]
    }
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn add(self, o: Point3) -> Point3 {
        Point3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }

    pub fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }

    pub fn scale(self, k: f64) -> Point3 {
        Point3::new(self.x * k, self.y * k, self.z * k)
    }

    pub fn dot(self, o: Point3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Point3) -> Point3 {
        Point3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dist(self, o: Point3) -> f64 {
        self.sub(o).norm()
    }

    /// Unit vector in the same direction; `None` for near-zero input.
    pub fn normalized(self) -> Option<Point3> {
        let n = self.norm();
        if n < EPS {
            None
        } else {
            Some(self.scale(1.0 / n))
        }
    }

    pub fn xy(self) -> Point2 {
        Point2::new(self.x, self.y)
    }
}

/// Twice the signed area of triangle (a, b, c); positive when CCW.
pub fn cross2(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Shoelace signed area; positive for counter-clockwise rings.
pub fn signed_area(ring: &[Point2]) -> f64 {
    let n = ring.len();
    let mut s = 0.0;
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    0.5 * s
}

pub fn is_ccw(ring: &[Point2]) -> bool {
    signed_area(ring) > 0.0
}

/// True if `p` lies on segment `ab` within `EPS`.
pub fn on_segment(a: Point2, b: Point2, p: Point2) -> bool {
    dist_point_segment(p, a, b) <= EPS
}

pub fn dist_point_segment(p: Point2, a: Point2, b: Point2) -> f64 {
    let abx = b.x - a.x;
    let aby = b.y - a.y;
    let len2 = abx * abx + aby * aby;
    if len2 < EPS * EPS {
        return p.dist(a);
    }
    let t = (((p.x - a.x) * abx + (p.y - a.y) * aby) / len2).clamp(0.0, 1.0);
    p.dist(Point2::new(a.x + t * abx, a.y + t * aby))
}

/// Proper crossing test: true when the open interiors of the segments meet,
/// including collinear overlap of positive length. Merely sharing an
/// endpoint does not count.
pub fn segments_cross(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = cross2(c, d, a);
    let d2 = cross2(c, d, b);
    let d3 = cross2(a, b, c);
    let d4 = cross2(a, b, d);

    let scale = a.dist(b).max(c.dist(d)).max(1.0);
    let tol = EPS * scale;

    if ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol))
        && ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol))
    {
        return true;
    }

    // Collinear configurations: report a crossing when the overlap is more
    // than a shared endpoint.
    if d1.abs() <= tol && d2.abs() <= tol && d3.abs() <= tol && d4.abs() <= tol {
        let (lo1, hi1, lo2, hi2) = if (b.x - a.x).abs() > (b.y - a.y).abs() {
            (a.x.min(b.x), a.x.max(b.x), c.x.min(d.x), c.x.max(d.x))
        } else {
            (a.y.min(b.y), a.y.max(b.y), c.y.min(d.y), c.y.max(d.y))
        };
        return lo1.max(lo2) + EPS < hi1.min(hi2);
    }

    // One endpoint strictly interior to the other segment.
    for (p, u, v) in [(a, c, d), (b, c, d), (c, a, b), (d, a, b)] {
        if on_segment(u, v, p) && p.dist(u) > EPS && p.dist(v) > EPS {
            return true;
        }
    }
    false
}

/// Inclusive point-in-triangle test (boundary counts as inside).
pub fn point_in_triangle(a: Point2, b: Point2, c: Point2, p: Point2) -> bool {
    let scale = a.dist(b).max(b.dist(c)).max(1.0);
    let tol = EPS * scale;
    let d1 = cross2(a, b, p);
    let d2 = cross2(b, c, p);
    let d3 = cross2(c, a, p);
    let has_neg = d1 < -tol || d2 < -tol || d3 < -tol;
    let has_pos = d1 > tol || d2 > tol || d3 > tol;
    !(has_neg && has_pos)
}

fn ring_is_simple(ring: &[Point2]) -> bool {
    let n = ring.len();
    for i in 0..n {
        let (a, b) = (ring[i], ring[(i + 1) % n]);
        if a.dist(b) <= EPS {
            return false;
        }
        for j in i + 1..n {
            // Adjacent edges share an endpoint by construction.
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (c, d) = (ring[j], ring[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// Even-odd interior test for a single ring; points within `EPS` of the
/// boundary report as inside.
pub fn point_in_ring(ring: &[Point2], p: Point2) -> bool {
    let n = ring.len();
    for i in 0..n {
        if on_segment(ring[i], ring[(i + 1) % n], p) {
            return true;
        }
    }
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (vi, vj) = (ring[i], ring[j]);
        if (vi.y > p.y) != (vj.y > p.y) {
            let x_cross = vj.x + (p.y - vj.y) / (vi.y - vj.y) * (vi.x - vj.x);
            if p.x < x_cross {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

fn point_strictly_in_ring(ring: &[Point2], p: Point2) -> bool {
    let n = ring.len();
    for i in 0..n {
        if on_segment(ring[i], ring[(i + 1) % n], p) {
            return false;
        }
    }
    point_in_ring(ring, p)
}

/// Region bounded by a counter-clockwise outer ring with clockwise holes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolygonWithHoles {
    pub outer: Vec<Point2>,
    #[serde(default)]
    pub holes: Vec<Vec<Point2>>,
}

impl PolygonWithHoles {
    /// Build and validate. Ring orientations are normalized (outer CCW,
    /// holes CW) rather than rejected.
    pub fn new(
        mut outer: Vec<Point2>,
        mut holes: Vec<Vec<Point2>>,
    ) -> Result<Self, GeometryError> {
        if outer.len() < 3 {
            return Err(GeometryError::DegenerateRing(outer.len()));
        }
        if !outer.iter().all(|p| p.is_finite()) {
            return Err(GeometryError::SelfIntersecting);
        }
        if !is_ccw(&outer) {
            outer.reverse();
        }
        if !ring_is_simple(&outer) {
            return Err(GeometryError::SelfIntersecting);
        }
        for (i, hole) in holes.iter_mut().enumerate() {
            if hole.len() < 3 {
                return Err(GeometryError::DegenerateRing(hole.len()));
            }
            if is_ccw(hole) {
                hole.reverse();
            }
            if !ring_is_simple(hole) {
                return Err(GeometryError::SelfIntersecting);
            }
            if !hole.iter().all(|p| point_strictly_in_ring(&outer, *p)) {
                return Err(GeometryError::HoleOutsideOuter(i));
            }
        }
        for i in 0..holes.len() {
            for j in i + 1..holes.len() {
                if rings_touch(&holes[i], &holes[j]) {
                    return Err(GeometryError::HolesOverlap(i, j));
                }
            }
        }
        Ok(Self { outer, holes })
    }

    /// Outer area minus hole areas.
    pub fn area(&self) -> f64 {
        let mut a = signed_area(&self.outer).abs();
        for h in &self.holes {
            a -= signed_area(h).abs();
        }
        a
    }

    pub fn bounds(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.outer {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }
}

fn rings_touch(a: &[Point2], b: &[Point2]) -> bool {
    for i in 0..a.len() {
        for j in 0..b.len() {
            if segments_cross(a[i], a[(i + 1) % a.len()], b[j], b[(j + 1) % b.len()]) {
                return true;
            }
        }
    }
    a.iter().any(|p| point_in_ring(b, *p)) || b.iter().any(|p| point_in_ring(a, *p))
}

/// True iff `p` is inside the outer ring and outside every hole; the
/// boundary of either counts as inside the region.
pub fn point_in_region(p: Point2, poly: &PolygonWithHoles) -> bool {
    let n = poly.outer.len();
    for i in 0..n {
        if on_segment(poly.outer[i], poly.outer[(i + 1) % n], p) {
            return true;
        }
    }
    if !point_in_ring(&poly.outer, p) {
        return false;
    }
    for hole in &poly.holes {
        if point_strictly_in_ring(hole, p) {
            return false;
        }
    }
    true
}

/// Connect every hole to the outer ring with a bridge diagonal, producing a
/// single weakly simple ring with `n + n_1 + ... + n_i + 2i` vertices (each
/// bridge duplicates its two endpoints). Area is preserved.
pub fn bridge_holes(poly: &PolygonWithHoles) -> Result<Vec<Point2>, GeometryError> {
    let mut ring = poly.outer.clone();
    if ring.len() < 3 {
        return Err(GeometryError::DegenerateRing(ring.len()));
    }

    // Process holes leftmost-first so finished bridges rarely obstruct the
    // remaining ones.
    let mut order: Vec<usize> = (0..poly.holes.len()).collect();
    order.sort_by(|&a, &b| {
        let ax = poly.holes[a]
            .iter()
            .map(|p| p.x)
            .fold(f64::INFINITY, f64::min);
        let bx = poly.holes[b]
            .iter()
            .map(|p| p.x)
            .fold(f64::INFINITY, f64::min);
        ax.partial_cmp(&bx).unwrap()
    });

    let mut pending: Vec<&Vec<Point2>> = order.iter().map(|&i| &poly.holes[i]).collect();

    while !pending.is_empty() {
        let hole = pending.remove(0);
        let hole_id = poly
            .holes
            .iter()
            .position(|h| std::ptr::eq(h, hole))
            .unwrap_or(0);

        // Candidate bridges: every (ring vertex, hole vertex) pair, nearest
        // first, taking the first pair whose diagonal crosses nothing.
        let mut pairs: Vec<(usize, usize, f64)> = Vec::new();
        for (ri, rp) in ring.iter().enumerate() {
            for (hi, hp) in hole.iter().enumerate() {
                pairs.push((ri, hi, rp.dist(*hp)));
            }
        }
        pairs.sort_by(|a, b| a.2.partial_cmp(&b.2).unwrap());

        let mut spliced = false;
        'pairs: for (ri, hi, _) in pairs {
            let a = ring[ri];
            let b = hole[hi];
            if a.dist(b) <= EPS {
                continue;
            }
            if bridge_blocked(a, b, &ring, ri, usize::MAX)
                || bridge_blocked(a, b, hole, usize::MAX, hi)
            {
                continue;
            }
            for other in &pending {
                if bridge_blocked(a, b, other, usize::MAX, usize::MAX) {
                    continue 'pairs;
                }
            }
            // Splice: ..., ring[ri], hole[hi..], hole[..=hi], ring[ri], ...
            let mut next = Vec::with_capacity(ring.len() + hole.len() + 2);
            next.extend_from_slice(&ring[..=ri]);
            for k in 0..hole.len() {
                next.push(hole[(hi + k) % hole.len()]);
            }
            next.push(hole[hi]);
            next.extend_from_slice(&ring[ri..]);
            ring = next;
            spliced = true;
            break;
        }
        if !spliced {
            return Err(GeometryError::NoBridge(hole_id));
        }
    }
    Ok(ring)
}

/// True when the candidate diagonal `a -> b` crosses an edge of `ring`
/// (edges incident to exempt indices are skipped) or passes through one of
/// its vertices.
fn bridge_blocked(a: Point2, b: Point2, ring: &[Point2], skip_ring_v: usize, skip_hole_v: usize) -> bool {
    let n = ring.len();
    for j in 0..n {
        let j1 = (j + 1) % n;
        if j == skip_ring_v || j1 == skip_ring_v || j == skip_hole_v || j1 == skip_hole_v {
            // Edges incident to the bridge endpoints share only that point.
            if segments_cross(a, b, ring[j], ring[j1]) {
                return true;
            }
            continue;
        }
        if segments_cross(a, b, ring[j], ring[j1]) {
            return true;
        }
        // A vertex strictly interior to the diagonal would create a
        // T-junction in the triangulation.
        if on_segment(a, b, ring[j]) && ring[j].dist(a) > EPS && ring[j].dist(b) > EPS {
            return true;
        }
    }
    false
}

/// Triangle mesh over a polygon's vertices with an optional 3-coloring.
#[derive(Clone, Debug)]
pub struct TriangulationMesh {
    pub vertices: Vec<Point2>,
    /// Index triples, counter-clockwise.
    pub triangles: Vec<[usize; 3]>,
    /// One label in {0, 1, 2} per vertex, when colored.
    pub vertex_colors: Option<Vec<u8>>,
}

impl TriangulationMesh {
    pub fn triangle_area(&self, t: [usize; 3]) -> f64 {
        0.5 * cross2(
            self.vertices[t[0]],
            self.vertices[t[1]],
            self.vertices[t[2]],
        )
        .abs()
    }

    pub fn total_area(&self) -> f64 {
        self.triangles.iter().map(|t| self.triangle_area(*t)).sum()
    }
}

/// Ear-clipping triangulation of a (weakly) simple polygon. Exactly
/// `m - 2` triangles are produced for `m` input vertices; no vertex is
/// dropped or merged, so bridged rings keep their duplicate endpoints.
pub fn triangulate(ring: &[Point2]) -> Result<TriangulationMesh, GeometryError> {
    let m = ring.len();
    if m < 3 {
        return Err(GeometryError::DegenerateRing(m));
    }
    // Walk indices in CCW order regardless of input orientation.
    let mut active: Vec<usize> = if is_ccw(ring) {
        (0..m).collect()
    } else {
        (0..m).rev().collect()
    };
    let mut triangles: Vec<[usize; 3]> = Vec::with_capacity(m - 2);

    while active.len() > 3 {
        let n = active.len();
        let mut clipped = false;

        // Pass 1: strictly convex ears.
        for k in 0..n {
            let (ia, ib, ic) = (active[(k + n - 1) % n], active[k], active[(k + 1) % n]);
            let (a, b, c) = (ring[ia], ring[ib], ring[ic]);
            let scale = a.dist(b).max(b.dist(c)).max(1.0);
            if cross2(a, b, c) <= EPS * scale {
                continue;
            }
            if ear_contains_vertex(ring, &active, k, a, b, c)
                || diagonal_crosses(ring, &active, k, a, c)
            {
                continue;
            }
            triangles.push([ia, ib, ic]);
            active.remove(k);
            clipped = true;
            break;
        }
        if clipped {
            continue;
        }

        // Pass 2: degenerate ears (collinear triples, zero-width channel
        // remnants). They contribute no area but keep the count exact.
        for k in 0..n {
            let (ia, ib, ic) = (active[(k + n - 1) % n], active[k], active[(k + 1) % n]);
            let (a, b, c) = (ring[ia], ring[ib], ring[ic]);
            let scale = a.dist(b).max(b.dist(c)).max(1.0);
            if cross2(a, b, c).abs() > EPS * scale {
                continue;
            }
            let removable = on_segment(a, c, b)
                || a.dist(b) <= EPS
                || b.dist(c) <= EPS
                || a.dist(c) <= EPS;
            if !removable {
                continue;
            }
            triangles.push([ia, ib, ic]);
            active.remove(k);
            clipped = true;
            break;
        }
        if !clipped {
            return Err(GeometryError::NoEar);
        }
    }
    triangles.push([active[0], active[1], active[2]]);

    Ok(TriangulationMesh {
        vertices: ring.to_vec(),
        triangles,
        vertex_colors: None,
    })
}

fn ear_contains_vertex(
    ring: &[Point2],
    active: &[usize],
    k: usize,
    a: Point2,
    b: Point2,
    c: Point2,
) -> bool {
    let n = active.len();
    for j in 0..n {
        if j == k || j == (k + n - 1) % n || j == (k + 1) % n {
            continue;
        }
        let p = ring[active[j]];
        // Duplicates of a corner (bridge endpoints) do not block; the
        // diagonal test catches any genuine channel crossing.
        if p.dist(a) <= EPS || p.dist(b) <= EPS || p.dist(c) <= EPS {
            continue;
        }
        if point_in_triangle(a, b, c, p) {
            return true;
        }
    }
    false
}

fn diagonal_crosses(ring: &[Point2], active: &[usize], k: usize, a: Point2, c: Point2) -> bool {
    let n = active.len();
    let prev = (k + n - 1) % n;
    let next = (k + 1) % n;
    for j in 0..n {
        let j1 = (j + 1) % n;
        // Skip the two edges being replaced by the diagonal.
        if j == prev || j == k {
            continue;
        }
        let (u, v) = (ring[active[j]], ring[active[j1]]);
        // Edges sharing an endpoint with the diagonal cannot properly cross
        // it unless collinear-overlapping, which segments_cross reports.
        if (j == next || j1 == prev) && !segments_cross(a, c, u, v) {
            continue;
        }
        if segments_cross(a, c, u, v) {
            return true;
        }
    }
    false
}

/// Properly 3-color the mesh vertices so every triangle carries all three
/// colors, and return the indices of the least-used color class.
pub fn three_color(
    mesh: &TriangulationMesh,
) -> Result<(TriangulationMesh, Vec<usize>), GeometryError> {
    let nv = mesh.vertices.len();
    let nt = mesh.triangles.len();
    let mut colors: Vec<Option<u8>> = vec![None; nv];

    // Adjacency through shared edges.
    let mut edge_map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (ti, t) in mesh.triangles.iter().enumerate() {
        for e in 0..3 {
            let (u, v) = (t[e], t[(e + 1) % 3]);
            let key = (u.min(v), u.max(v));
            edge_map.entry(key).or_default().push(ti);
        }
    }
    if edge_map.values().any(|ts| ts.len() > 2) {
        return Err(GeometryError::InconsistentEdges);
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nt];
    for ts in edge_map.values() {
        if ts.len() == 2 {
            adj[ts[0]].push(ts[1]);
            adj[ts[1]].push(ts[0]);
        }
    }

    let mut visited = vec![false; nt];
    for root in 0..nt {
        if visited[root] {
            continue;
        }
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        visited[root] = true;
        while let Some(ti) = queue.pop_front() {
            color_triangle(mesh.triangles[ti], &mut colors)?;
            for &nb in &adj[ti] {
                if !visited[nb] {
                    visited[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
    }

    let colors: Vec<u8> = colors.into_iter().map(|c| c.unwrap_or(0)).collect();
    // Re-check every triangle; a dual cycle shows up as a conflict.
    for t in &mesh.triangles {
        let (a, b, c) = (colors[t[0]], colors[t[1]], colors[t[2]]);
        if a == b || b == c || a == c {
            return Err(GeometryError::DualNotTree);
        }
    }

    let mut counts = [0usize; 3];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let smallest = (0..3).min_by_key(|&c| counts[c]).unwrap() as u8;
    let class: Vec<usize> = (0..nv).filter(|&v| colors[v] == smallest).collect();

    let mut out = mesh.clone();
    out.vertex_colors = Some(colors);
    Ok((out, class))
}

fn color_triangle(t: [usize; 3], colors: &mut [Option<u8>]) -> Result<(), GeometryError> {
    let assigned: Vec<u8> = t.iter().filter_map(|&v| colors[v]).collect();
    let mut free: Vec<u8> = (0..3u8).filter(|c| !assigned.contains(c)).collect();
    for &v in &t {
        if colors[v].is_none() {
            let c = free.first().copied().ok_or(GeometryError::DualNotTree)?;
            free.remove(0);
            colors[v] = Some(c);
        }
    }
    Ok(())
}

/// Convex hull (Andrew's monotone chain), counter-clockwise, no collinear
/// points on the hull.
pub fn convex_hull(points: &[Point2]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| {
        points[a]
            .x
            .partial_cmp(&points[b].x)
            .unwrap()
            .then(points[a].y.partial_cmp(&points[b].y).unwrap())
    });
    if idx.len() < 3 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(idx.iter())
        } else {
            Box::new(idx.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2 {
                let a = points[hull[hull.len() - 2]];
                let b = points[hull[hull.len() - 1]];
                if cross2(a, b, points[i]) <= EPS {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}
