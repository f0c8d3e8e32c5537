//! Explicit coverings of the plane by complete folding curves.
//!
//! Each construction realizes a named family: the one-curve covering grown
//! by repeated unfolding of a triangle-covering curve, the two-curve
//! covering from the positive sequence, the six-curve covering from the
//! alternating sequence, and an eight-curve covering mixing two
//! non-isomorphic sequences (which is a covering but not locally
//! isomorphic).

use crate::covering::{Covering, CoveringCurve, CoveringError};
use crate::curve::{norm_edge, rho_value, rot_quarter, Curve, Point, Vec2};
use crate::seq::{bar, ChoiceRule, CompleteSpec, Sign};
use std::collections::{HashMap, HashSet};

/// Builds the piece of a complete curve with turn word `spec`, consisting of
/// segments `lo+1 ..= hi` (vertices `V_lo .. V_hi`), where vertex `V_0` sits
/// at `origin` and segment 1 (from `V_0` to `V_1`) has displacement `d1`.
pub fn complete_piece(
    spec: &CompleteSpec,
    lo: i64,
    hi: i64,
    origin: Point,
    d1: Vec2,
) -> Result<Curve, CoveringError> {
    assert!(lo < 0 && hi > 0, "piece must straddle the origin vertex");
    spec.window_det(lo + 1, hi - 1)
        .map_err(|e| CoveringError::Invalid(e.to_string()))?;
    // Displacement of segment i for i = 1 ..= hi, then walk back to lo + 1.
    let mut ds: Vec<Vec2> = Vec::with_capacity((hi - lo) as usize);
    let mut d = d1;
    ds.push(d);
    for i in 1..hi {
        let t = spec
            .value_at(i)
            .ok_or_else(|| CoveringError::Invalid(format!("undetermined turn {i}")))?;
        d = crate::curve::rot_quarter(d, t);
        ds.push(d);
    }
    let mut back: Vec<Vec2> = Vec::new();
    let mut d = d1;
    for i in (lo + 1..1).rev() {
        // d currently holds the displacement of segment i + 1.
        let t = spec
            .value_at(i)
            .ok_or_else(|| CoveringError::Invalid(format!("undetermined turn {i}")))?;
        d = crate::curve::rot_quarter(d, -t);
        back.push(d);
    }
    back.reverse();
    back.extend(ds);
    // Start point: origin minus the displacements of segments lo+1 ..= 0.
    let mut start = origin;
    for dd in &back[..(-lo) as usize] {
        start = (start.0 - dd.0, start.1 - dd.1);
    }
    Ok(Curve::from_displacements(start, &back))
}

/// Rotates a curve by a half turn about the origin.
pub fn rotate_pi(c: &Curve) -> Curve {
    Curve::new(
        (-c.start.0, -c.start.1),
        (-c.dir.0, -c.dir.1),
        c.turns.clone(),
    )
}

/// Rotates a curve by a quarter turn (`+1` left, `-1` right) about the origin.
pub fn rotate_quarter_about_origin(c: &Curve, turn: Sign) -> Curve {
    let r = |p: Point| -> Point {
        if turn > 0 {
            (-p.1, p.0)
        } else {
            (p.1, -p.0)
        }
    };
    Curve::new(r(c.start), r(c.dir), c.turns.clone())
}

/// Number of segments to generate on each side of the origin so that the
/// central piece of a plane-filling curve safely covers a window of the
/// given half-width.
fn piece_half_length(half_width: i64) -> i64 {
    // A covering curve fills area at unit density; a disk of radius r needs
    // about pi r^2 segments. Generous slack absorbs the fractal boundary.
    64.max(24 * half_width * half_width)
}

/// The two-curve covering defined by the positive sequence: one curve with
/// the positive turn word through the origin, and its image under a half
/// turn. The origin is the common limit vertex of both curves.
pub fn positive_covering(half_width: i64) -> Result<Covering, CoveringError> {
    let spec = CompleteSpec::positive();
    let m = piece_half_length(half_width);
    let c = complete_piece(&spec, -m, m, (0, 0), (1, 0))?;
    let d = rotate_pi(&c);
    Ok(Covering {
        window: (-half_width, -half_width, half_width, half_width),
        curves: vec![
            CoveringCurve {
                id: "S0".into(),
                curve: c,
            },
            CoveringCurve {
                id: "S1".into(),
                curve: d,
            },
        ],
    })
}

/// Bits of 2-adic precision kept for turn-field centers.
const FIELD_BITS: u32 = 58;
const FIELD_MASK: i64 = (1i64 << FIELD_BITS) - 1;

fn val2(w: i64) -> u32 {
    if w == 0 {
        FIELD_BITS
    } else {
        w.trailing_zeros()
    }
}

/// Level and turn sign of the alternating-sequence turn field at `p`,
/// relative to a center `(gx, gy)` given as truncated 2-adic integers.
///
/// Writing `w = p - (gx, gy)` and `v` for the smaller 2-adic valuation of
/// the two coordinates, the level is `2v` when the valuations differ and
/// `2v + 1` when they agree. The sign at an even level `2k` is `+1` exactly
/// when `w.x >> k` is even; at an odd level `2k + 1` it is `+1` exactly
/// when `(w.x >> k) + (w.y >> k) mod 4` is `0` or `1`. Every curve traced
/// from this field carries a window of a complete folding sequence with
/// alternating level signs.
fn field_level_sign(p: Point, gx: i64, gy: i64) -> (u32, Sign) {
    let wx = p.0.wrapping_sub(gx) & FIELD_MASK;
    let wy = p.1.wrapping_sub(gy) & FIELD_MASK;
    let (vx, vy) = (val2(wx), val2(wy));
    let k = vx.min(vy);
    if vx != vy {
        let i = wx >> k;
        (2 * k, if i & 1 == 0 { 1 } else { -1 })
    } else {
        let s = (wx >> k).wrapping_add(wy >> k);
        (2 * k + 1, if (s >> 1) & 1 == 0 { 1 } else { -1 })
    }
}

/// Traces the curve pieces of a turn field through a window.
///
/// Every directed lattice edge of the window that points in its admitted
/// traversal direction (epsilon 0) and is not yet covered seeds a walk: back
/// up `steps` segments against the field, then forward `2 * steps` segments
/// along it. With `steps` large relative to the window area, each seed
/// yields the full visit of one curve and later seeds only start on other
/// curves.
fn trace_field_covering(
    half_width: i64,
    steps: usize,
    sigma: &dyn Fn(Point) -> Sign,
) -> Vec<Curve> {
    let dirs = [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)];
    let mut used: HashSet<(Point, Vec2)> = HashSet::new();
    let mut pieces: Vec<Curve> = Vec::new();
    for x in -half_width..=half_width {
        for y in -half_width..=half_width {
            let p = (x, y);
            for d in dirs {
                let q = (p.0 + d.0, p.1 + d.1);
                if q.0.abs() > half_width || q.1.abs() > half_width {
                    continue;
                }
                let (base, nd) = norm_edge(p, q);
                let fwd = base == p;
                if (rho_value(0, base, nd) > 0) != fwd || used.contains(&(p, d)) {
                    continue;
                }
                let (mut cp, mut cd) = (p, d);
                for _ in 0..steps {
                    let t = sigma(cp);
                    let dprev = rot_quarter(cd, -t);
                    cp = (cp.0 - dprev.0, cp.1 - dprev.1);
                    cd = dprev;
                }
                let start = cp;
                let mut ds = vec![cd];
                for _ in 0..2 * steps {
                    let nq = (cp.0 + cd.0, cp.1 + cd.1);
                    cd = rot_quarter(cd, sigma(nq));
                    cp = nq;
                    ds.push(cd);
                }
                let piece = Curve::from_displacements(start, &ds);
                let vs = piece.vertices();
                for (i, &dd) in ds.iter().enumerate() {
                    used.insert((vs[i], dd));
                }
                pieces.push(piece);
            }
        }
    }
    pieces
}

fn require_power_of_two(half_width: i64) -> Result<(), CoveringError> {
    if half_width <= 0 || !(half_width as u64).is_power_of_two() {
        return Err(CoveringError::Invalid(format!(
            "half-width {half_width} is not a positive power of two"
        )));
    }
    Ok(())
}

/// Walk length that lets a traced piece complete all its visits to a window
/// of the given half-width before the walk ends.
fn trace_steps(half_width: i64) -> usize {
    (256 * half_width * half_width).max(65536) as usize
}

/// The six-curve covering defined by the alternating sequence: the turn
/// field with center `(0, 0)` decomposes the window into six curve pieces,
/// all carrying locally isomorphic sequences. The turn at the origin itself
/// (where the field level is unbounded) is fixed to `+1`.
pub fn alternating_covering(half_width: i64) -> Result<Covering, CoveringError> {
    require_power_of_two(half_width)?;
    let sigma = |p: Point| {
        if p == (0, 0) {
            1
        } else {
            field_level_sign(p, 0, 0).1
        }
    };
    let pieces = trace_field_covering(half_width, trace_steps(half_width), &sigma);
    Ok(Covering {
        window: (-half_width, -half_width, half_width, half_width),
        curves: pieces
            .into_iter()
            .enumerate()
            .map(|(i, curve)| CoveringCurve {
                id: format!("C{i}"),
                curve,
            })
            .collect(),
    })
}

/// The eight-curve covering mixing two negation-related sequence classes.
///
/// The half-plane below the main diagonal is the mirror image of the
/// half-plane above it: the edges and visit pairings of the six-curve
/// covering are kept where the edge midpoint lies above the diagonal,
/// reflected across it elsewhere, and curves reaching a diagonal point
/// bounce back into their own half instead of crossing. Reflection reverses
/// turn signs, so the arcs above the diagonal carry one factor class and
/// the arcs below carry its exact negation; the covering is valid but not
/// locally isomorphic. Six arcs meet the window; the longest arc of each
/// class is cut in two at a vertex far outside the window, giving the four
/// labels `T0..T3` (base class) and `U0..U3` (negated class).
pub fn fig9_covering(half_width: i64) -> Result<Covering, CoveringError> {
    require_power_of_two(half_width)?;
    if half_width < 8 {
        return Err(CoveringError::Invalid(
            "the eight-curve covering needs a half-width of at least 8".into(),
        ));
    }
    let sigma = |p: Point| {
        if p == (0, 0) {
            1
        } else {
            field_level_sign(p, 0, 0).1
        }
    };
    // Trace the six-curve field on a padded window, so that the cut
    // vertices and their neighborhoods can sit well outside the window.
    let m = half_width + 32;
    let pieces = trace_field_covering(m + 2, trace_steps(m + 2), &sigma);
    let mirror = |p: Point| (p.1, p.0);
    let und = |a: Point, b: Point| if a <= b { (a, b) } else { (b, a) };
    let inside = |p: Point, h: i64| p.0.abs() <= h && p.1.abs() <= h;
    let upper_edge = |a: Point, b: Point| a.0 + b.0 > a.1 + b.1;
    // Collect the traced edges and visit pairings of the upper half.
    let mut edges: HashSet<(Point, Point)> = HashSet::new();
    let mut pairs: HashMap<Point, Vec<(Point, Point)>> = HashMap::new();
    for c in &pieces {
        let vs = c.vertices();
        for w in vs.windows(2) {
            let (a, b) = (w[0], w[1]);
            if inside(a, m) && inside(b, m) && upper_edge(a, b) {
                edges.insert(und(a, b));
            }
        }
        for w in vs.windows(3) {
            let v = w[1];
            if v.0 > v.1 && inside(v, m) {
                pairs.entry(v).or_default().push((w[0], w[2]));
            }
        }
    }
    // Mirror them into the lower half.
    let up_edges: Vec<(Point, Point)> = edges.iter().copied().collect();
    for &(a, b) in &up_edges {
        edges.insert(und(mirror(a), mirror(b)));
    }
    let up_pairs: Vec<(Point, Vec<(Point, Point)>)> =
        pairs.iter().map(|(k, v)| (*k, v.clone())).collect();
    for (v, ps) in &up_pairs {
        let e = pairs.entry(mirror(*v)).or_default();
        for &(a, b) in ps {
            e.push((mirror(a), mirror(b)));
        }
    }
    // At each diagonal point, pair the two edges on a common side, so that
    // curves bounce off the diagonal instead of crossing it.
    for t in -m - 1..=m + 1 {
        let v = (t, t);
        let mut ps = Vec::new();
        if edges.contains(&und(v, (t + 1, t))) && edges.contains(&und(v, (t, t - 1))) {
            ps.push(((t + 1, t), (t, t - 1)));
        }
        if edges.contains(&und(v, (t - 1, t))) && edges.contains(&und(v, (t, t + 1))) {
            ps.push(((t - 1, t), (t, t + 1)));
        }
        pairs.insert(v, ps);
    }
    let partner = |v: Point, u: Point, pairs: &HashMap<Point, Vec<(Point, Point)>>| {
        pairs.get(&v).and_then(|ps| {
            ps.iter().find_map(|&(a, b)| {
                if a == u {
                    Some(b)
                } else if b == u {
                    Some(a)
                } else {
                    None
                }
            })
        })
    };
    // Walk maximal arcs along the pairings.
    let mut used: HashSet<(Point, Point)> = HashSet::new();
    let mut arcs: Vec<Vec<Point>> = Vec::new();
    let mut edge_list: Vec<(Point, Point)> = edges.iter().copied().collect();
    edge_list.sort();
    for &(a0, b0) in &edge_list {
        if used.contains(&(a0, b0)) {
            continue;
        }
        let mut path = vec![a0, b0];
        used.insert((a0, b0));
        loop {
            let (u, v) = (path[path.len() - 2], path[path.len() - 1]);
            match partner(v, u, &pairs) {
                Some(w) if !used.contains(&und(v, w)) && edges.contains(&und(v, w)) => {
                    used.insert(und(v, w));
                    path.push(w);
                }
                _ => break,
            }
        }
        loop {
            let (u, v) = (path[1], path[0]);
            match partner(v, u, &pairs) {
                Some(w) if !used.contains(&und(v, w)) && edges.contains(&und(v, w)) => {
                    used.insert(und(v, w));
                    path.insert(0, w);
                }
                _ => break,
            }
        }
        arcs.push(path);
    }
    arcs.retain(|a| a.iter().any(|&p| inside(p, half_width)));
    arcs.sort_by_key(|a| std::cmp::Reverse(a.len()));
    if arcs.len() != 6 {
        return Err(CoveringError::Invalid(format!(
            "expected six arcs meeting the window, found {}",
            arcs.len()
        )));
    }
    // Cut the longest arc of each class in two at a vertex whose whole
    // neighborhood lies outside the window.
    let gap = 12usize;
    let mut paths: Vec<Vec<Point>> = Vec::new();
    for (i, path) in arcs.iter().enumerate() {
        if i >= 2 {
            paths.push(path.clone());
            continue;
        }
        let mid = path.len() / 2;
        let cut = (0..path.len() / 2)
            .flat_map(|off| [mid + off, mid.wrapping_sub(off)])
            .find(|&c| {
                c > gap
                    && c + gap + 1 < path.len()
                    && path[c - gap..=c + gap].iter().all(|&p| !inside(p, half_width))
            })
            .ok_or_else(|| {
                CoveringError::Invalid("no admissible cut vertex outside the window".into())
            })?;
        paths.push(path[..=cut].to_vec());
        paths.push(path[cut..].to_vec());
    }
    // Arcs above the diagonal carry the base class T, arcs below the
    // negated class U.
    let mut t_arcs: Vec<Curve> = Vec::new();
    let mut u_arcs: Vec<Curve> = Vec::new();
    for path in &paths {
        let ds: Vec<Vec2> = path
            .windows(2)
            .map(|w| (w[1].0 - w[0].0, w[1].1 - w[0].1))
            .collect();
        let curve = Curve::from_displacements(path[0], &ds);
        let off = path.iter().find(|p| p.0 != p.1).expect("arc has an off-diagonal vertex");
        if off.0 > off.1 {
            t_arcs.push(curve);
        } else {
            u_arcs.push(curve);
        }
    }
    if t_arcs.len() != 4 || u_arcs.len() != 4 {
        return Err(CoveringError::Invalid(format!(
            "expected four arcs per class, found {} and {}",
            t_arcs.len(),
            u_arcs.len()
        )));
    }
    let mut curves = Vec::with_capacity(8);
    for (label, arcs) in [("T", t_arcs), ("U", u_arcs)] {
        for (i, curve) in arcs.into_iter().enumerate() {
            curves.push(CoveringCurve {
                id: format!("{label}{i}"),
                curve,
            });
        }
    }
    Ok(Covering {
        window: (-half_width, -half_width, half_width, half_width),
        curves,
    })
}

/// Curve-count case of a complete folding sequence for plane coverings: the
/// set `{n : sign at level n equals (-1)^n}` is finite or cofinite exactly
/// when coverings by curves of the sequence can have six curves; otherwise
/// they have two.
pub fn theorem315_case(spec: &CompleteSpec) -> Result<u32, CoveringError> {
    // Only the tail rule matters: finitely many explicit choices cannot
    // change whether the set is finite or cofinite.
    match spec.rule {
        // Tail signs +1: level n is in the set exactly for even n, which is
        // neither finite nor cofinite.
        ChoiceRule::AllPlus => Ok(2),
        // Tail signs (-1)^{n+1}: no tail level is in the set.
        ChoiceRule::Alternating => Ok(6),
        ChoiceRule::None => Err(CoveringError::Invalid(
            "sequence tail rule is not classifiable".into(),
        )),
    }
}

/// An isosceles right triangle with vertices in `Z²`, in one of eight
/// orientations: four quarter-turn rotations of the axis-legged form (legs
/// `2^n` along the axes) and four of the diagonal-legged form (legs
/// `2^n * sqrt 2` along the diagonals, hypotenuse `2^{n+1}` on an axis).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triangle {
    /// The right-angle vertex.
    pub right: Point,
    /// Orientation: `0..4` axis-legged rotated by `orient` quarter turns,
    /// `4..8` diagonal-legged rotated by `orient - 4` quarter turns.
    pub orient: u8,
    /// Log2 of the leg parameter `2^n`.
    pub log_leg: u32,
}

fn rot_n(k: u8, v: Vec2) -> Vec2 {
    let mut d = v;
    for _ in 0..(k % 4) {
        d = (-d.1, d.0);
    }
    d
}

impl Triangle {
    /// The right-angle vertex followed by the two acute vertices.
    pub fn vertices(&self) -> [Point; 3] {
        let l = 1i64 << self.log_leg;
        let (a, b) = if self.orient < 4 {
            (rot_n(self.orient, (1, 0)), rot_n(self.orient, (0, 1)))
        } else {
            (
                rot_n(self.orient - 4, (-1, -1)),
                rot_n(self.orient - 4, (1, -1)),
            )
        };
        let r = self.right;
        [r, (r.0 + l * a.0, r.1 + l * a.1), (r.0 + l * b.0, r.1 + l * b.1)]
    }

    /// Inward-oriented edge functions: `h_i(p) >= 0` for all three exactly
    /// on the closed triangle.
    fn half_planes(&self) -> [(i64, i64, i64); 3] {
        let [v0, v1, v2] = self.vertices();
        let edge = |a: Point, b: Point, inside: Point| {
            let (nx, ny) = (-(b.1 - a.1), b.0 - a.0);
            let c = -(nx * a.0 + ny * a.1);
            if nx * inside.0 + ny * inside.1 + c >= 0 {
                (nx, ny, c)
            } else {
                (-nx, -ny, -c)
            }
        };
        [edge(v0, v1, v2), edge(v1, v2, v0), edge(v2, v0, v1)]
    }

    fn eval(h: (i64, i64, i64), p: Point) -> i64 {
        h.0 * p.0 + h.1 * p.1 + h.2
    }

    /// Whether `p` lies strictly inside.
    pub fn strictly_inside(&self, p: Point) -> bool {
        self.half_planes().iter().all(|&h| Self::eval(h, p) > 0)
    }

    /// Whether the closed unit segment from `a` to `b` misses the closed
    /// triangle entirely.
    fn segment_outside(&self, a: Point, b: Point) -> bool {
        // Clip the segment parameter interval against the half-planes with
        // exact rational endpoints (num / den, den > 0).
        let (mut lo, mut hi) = ((0i64, 1i64), (1i64, 1i64));
        for h in self.half_planes() {
            let (ha, hb) = (Self::eval(h, a), Self::eval(h, b));
            let d = hb - ha;
            // h(t) = ha + t d >= 0.
            if d == 0 {
                if ha < 0 {
                    return true;
                }
            } else if d > 0 {
                // t >= -ha / d
                if lo.0 * d < -ha * lo.1 {
                    lo = (-ha, d);
                }
            } else {
                // t <= ha / (-d)
                if hi.0 * (-d) > ha * hi.1 {
                    hi = (ha, -d);
                }
            }
        }
        // Empty when lo > hi.
        lo.0 * hi.1 > hi.0 * lo.1
    }

    /// The axis-parallel boundary edges, as (anchor, unit direction, length).
    fn axis_edges(&self) -> Vec<(Point, Vec2, i64)> {
        let [v0, v1, v2] = self.vertices();
        let mut out = Vec::new();
        for (a, b) in [(v0, v1), (v1, v2), (v2, v0)] {
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            if dx == 0 || dy == 0 {
                let len = (dx + dy).abs();
                let d = (dx.signum(), dy.signum());
                out.push((a, d, len));
            }
        }
        out
    }
}

/// Whether curve `c` covers triangle `t`: all unit edges strictly inside
/// `t` are supports, the unit edges along each axis-parallel boundary edge
/// alternate between support and non-support, no segment of `c` lies
/// entirely outside `t`, the right-angle vertex of `t` is an endpoint of
/// `c`, and at least one acute vertex of `t` is an endpoint of `c`.
pub fn covers_triangle(c: &Curve, t: &Triangle) -> bool {
    covers_triangle_with(&c.support_set(), c.vertices().first().copied(), c.vertices().last().copied(), &c.segments(), t)
}

fn covers_triangle_with(
    support: &HashSet<(Point, Vec2)>,
    first: Option<Point>,
    last: Option<Point>,
    segments: &[(Point, Point)],
    t: &Triangle,
) -> bool {
    let [v0, v1, v2] = t.vertices();
    let xs = [v0.0, v1.0, v2.0];
    let ys = [v0.1, v1.1, v2.1];
    let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    // Interior edges covered.
    for x in x0..=x1 {
        for y in y0..=y1 {
            for d in [(1i64, 0i64), (0, 1)] {
                let p = (x, y);
                let q = (x + d.0, y + d.1);
                if t.strictly_inside(p) && t.strictly_inside(q) && !support.contains(&(p, d)) {
                    return false;
                }
            }
        }
    }
    // Boundary edges alternate.
    for (anchor, d, len) in t.axis_edges() {
        let covered: Vec<bool> = (0..len)
            .map(|i| {
                let p = (anchor.0 + i * d.0, anchor.1 + i * d.1);
                let q = (p.0 + d.0, p.1 + d.1);
                support.contains(&norm_edge(p, q))
            })
            .collect();
        if !covered
            .iter()
            .enumerate()
            .all(|(i, &s)| s == (covered[0] == (i % 2 == 0)))
        {
            return false;
        }
    }
    // No exterior segment.
    if segments.iter().any(|&(a, b)| t.segment_outside(a, b)) {
        return false;
    }
    // Endpoint conditions.
    let ends = [first, last];
    if !ends.contains(&Some(v0)) {
        return false;
    }
    ends.contains(&Some(v1)) || ends.contains(&Some(v2))
}

/// The two unfolding candidates that extend `c` across the right-angle
/// vertex of its covered triangle `t`: if `c` starts at that vertex the
/// mirror copy is prepended, otherwise appended, with center turn `+1` or
/// `-1`.
fn unfold_candidates(c: &Curve, t: &Triangle) -> Result<[Curve; 2], CoveringError> {
    let verts = c.vertices();
    let (first, last) = (verts[0], *verts.last().unwrap());
    let prepend = if t.right == first {
        true
    } else if t.right == last {
        false
    } else {
        return Err(CoveringError::Invalid(
            "curve does not end at the right-angle vertex".into(),
        ));
    };
    let w = &c.turns;
    let build = |s: Sign| -> Curve {
        if prepend {
            // New first half: walk backwards from the start of `c` through
            // the reversed-negated word.
            let bw = bar(w);
            let mut ds_back: Vec<Vec2> = Vec::with_capacity(w.len() + 1);
            let mut d = rot_quarter(c.dir, -s);
            ds_back.push(d);
            for &turn in bw.iter().rev() {
                d = rot_quarter(d, -turn);
                ds_back.push(d);
            }
            ds_back.reverse();
            let mut start = c.start;
            for dd in &ds_back {
                start = (start.0 - dd.0, start.1 - dd.1);
            }
            let mut ds = ds_back;
            ds.extend(c.displacements());
            Curve::from_displacements(start, &ds)
        } else {
            let mut turns = w.clone();
            turns.push(s);
            turns.extend(bar(w));
            Curve::new(c.start, c.dir, turns)
        }
    };
    Ok([build(1), build(-1)])
}

/// Finds the triangle of the next order covered by a candidate curve, if
/// any: the form (axis or diagonal legs) is determined by the parity of the
/// folding order, and the right-angle vertex must be a curve endpoint.
fn find_covered_triangle(c: &Curve, order: u32) -> Option<Triangle> {
    let (base, log_leg) = if order % 2 == 0 {
        (0u8, order / 2)
    } else {
        (4u8, (order - 1) / 2)
    };
    let support = c.support_set();
    let verts = c.vertices();
    let (first, last) = (*verts.first().unwrap(), *verts.last().unwrap());
    let segments = c.segments();
    for &right in &[first, last] {
        for orient in base..base + 4 {
            let t = Triangle {
                right,
                orient,
                log_leg,
            };
            if covers_triangle_with(&support, Some(first), Some(last), &segments, &t) {
                return Some(t);
            }
        }
    }
    None
}

/// Extends a curve covering `t` by one unfolding so that the result covers
/// `target`, testing both center signs.
pub fn extend_covering_step(
    c: &Curve,
    t: &Triangle,
    target: &Triangle,
) -> Result<Curve, CoveringError> {
    for cand in unfold_candidates(c, t)? {
        if covers_triangle(&cand, target) {
            return Ok(cand);
        }
    }
    Err(CoveringError::Invalid(
        "neither unfolding candidate covers the target triangle".into(),
    ))
}

/// Runs one six-step extension round: starting from a curve of odd order
/// covering a diagonal-legged triangle, repeatedly unfolds, choosing center
/// signs by depth-first search so that after six steps the new triangle
/// contains the old one strictly in its interior.
fn extension_round(c: &Curve, t: &Triangle, order: u32) -> Result<(Curve, Triangle), CoveringError> {
    fn dfs(
        c: &Curve,
        t: &Triangle,
        order: u32,
        depth: u32,
        t0: &Triangle,
    ) -> Option<(Curve, Triangle)> {
        if depth == 6 {
            let inside = t0.vertices().iter().all(|&v| t.strictly_inside(v));
            return inside.then(|| (c.clone(), *t));
        }
        let cands = unfold_candidates(c, t).ok()?;
        for cand in cands {
            if let Some(nt) = find_covered_triangle(&cand, order + 1) {
                if let Some(hit) = dfs(&cand, &nt, order + 1, depth + 1, t0) {
                    return Some(hit);
                }
            }
        }
        None
    }
    dfs(c, t, order, 0, t).ok_or_else(|| {
        CoveringError::Invalid("no six-step extension leaves the triangle interior".into())
    })
}

/// Seed for the effective one-curve covering: the first 3-folding curve
/// (in enumeration order) that covers a diagonal-legged triangle.
fn effective_seed() -> (Curve, Triangle) {
    for w in crate::seq::all_n_folding(3) {
        for dir in [(1i64, 0i64), (0, 1), (-1, 0), (0, -1)] {
            let c = Curve::new((0, 0), dir, w.clone());
            if let Some(t) = find_covered_triangle(&c, 3) {
                return (c, t);
            }
        }
    }
    unreachable!("a 3-folding curve covering a triangle exists");
}

/// The one-curve covering built effectively: starting from a 3-folding seed
/// covering a triangle, each round runs six unfoldings after which the
/// previous triangle is strictly interior to the new one. Returns the
/// covering of the largest centered square window inside the final
/// triangle, as a single curve.
pub fn effective_single_covering(rounds: u32) -> Result<Covering, CoveringError> {
    assert!(rounds >= 1, "at least one round");
    let (mut c, mut t) = effective_seed();
    let mut order = 3u32;
    for _ in 0..rounds {
        let (nc, nt) = extension_round(&c, &t, order)?;
        c = nc;
        t = nt;
        order += 6;
    }
    // Largest axis square strictly inside the final triangle, centered at
    // the centroid.
    let [v0, v1, v2] = t.vertices();
    let cx = (v0.0 + v1.0 + v2.0) / 3;
    let cy = (v0.1 + v1.1 + v2.1) / 3;
    let mut half = 1i64 << (t.log_leg + 1);
    while half > 0 {
        let corners = [
            (cx - half, cy - half),
            (cx - half, cy + half),
            (cx + half, cy - half),
            (cx + half, cy + half),
        ];
        if corners.iter().all(|&p| t.strictly_inside(p)) {
            break;
        }
        half -= 1;
    }
    Ok(Covering {
        window: (cx - half, cy - half, cx + half, cy + half),
        curves: vec![CoveringCurve {
            id: "E0".into(),
            curve: c,
        }],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fingerprint(w: &[Sign]) -> Vec<crate::seq::FoldWord> {
        crate::covering::order4_fingerprint(w)
    }

    #[test]
    fn alternating_covering_is_valid_with_six_curves() {
        let cov = alternating_covering(8).unwrap();
        let report = cov.validate();
        assert!(report.valid, "{report:?}");
        assert_eq!(report.curve_count, 6);
        cov.sigma_field().unwrap();
        // All pieces carry the same factor class.
        let f0 = fingerprint(&cov.curves[0].curve.turns);
        assert_eq!(f0.len(), 8);
        for cc in &cov.curves {
            assert_eq!(fingerprint(&cc.curve.turns), f0, "{}", cc.id);
        }
    }

    #[test]
    fn alternating_field_landmarks() {
        // (2^n, 0) sits at level 2n and (2^n, 2^n) at level 2n + 1.
        for n in 0..20u32 {
            let p = (1i64 << n, 0);
            assert_eq!(field_level_sign(p, 0, 0).0, 2 * n);
            let q = (1i64 << n, 1i64 << n);
            assert_eq!(field_level_sign(q, 0, 0).0, 2 * n + 1);
        }
    }

    #[test]
    fn fig9_covering_has_eight_curves_split_four_four() {
        let cov = fig9_covering(8).unwrap();
        let report = cov.validate();
        assert!(report.valid, "{report:?}");
        assert_eq!(report.curve_count, 8);
        cov.sigma_field().unwrap();
        let t_class = fingerprint(&cov.curves[0].curve.turns);
        assert_eq!(t_class.len(), 8);
        let mut t_count = 0;
        let mut u_count = 0;
        let neg: Vec<_> = {
            let mut v: Vec<_> = t_class
                .iter()
                .map(|w| w.iter().map(|&a| -a).collect::<Vec<_>>())
                .collect();
            v.sort();
            v
        };
        for cc in &cov.curves {
            let f = fingerprint(&cc.curve.turns);
            if f == t_class {
                t_count += 1;
            } else if f == neg {
                u_count += 1;
            } else {
                panic!("piece {} has an unexpected factor class", cc.id);
            }
        }
        assert_eq!((t_count, u_count), (4, 4));
    }

    #[test]
    fn theorem315_cases() {
        assert_eq!(theorem315_case(&CompleteSpec::positive()).unwrap(), 2);
        assert_eq!(theorem315_case(&CompleteSpec::alternating()).unwrap(), 6);
        let mut perturbed = CompleteSpec::positive();
        perturbed.choices = vec![(1, -1)];
        assert_eq!(theorem315_case(&perturbed).unwrap(), 2);
    }

    #[test]
    fn effective_seed_covers_triangle() {
        let (c, t) = effective_seed();
        assert!(covers_triangle(&c, &t));
        assert_eq!(c.segment_count(), 8);
        assert!(t.orient >= 4, "seed triangle has diagonal legs");
    }

    #[test]
    fn effective_single_covering_one_round() {
        let cov = effective_single_covering(1).unwrap();
        assert_eq!(cov.curves[0].curve.segment_count(), 1 << 9);
        let report = cov.validate();
        assert!(report.valid, "{report:?}");
        assert_eq!(report.curve_count, 1);
    }

    #[test]
    fn positive_covering_is_valid() {
        let cov = positive_covering(8).unwrap();
        let report = cov.validate();
        assert!(report.valid, "{report:?}");
        assert_eq!(report.curve_count, 2);
        // Both curves pass through the origin and turn left there.
        let sigma = cov.sigma_field().unwrap();
        assert_eq!(sigma.get(&(0, 0)), Some(&1));
        for cc in &cov.curves {
            assert!(cc.curve.vertex_set().contains(&(0, 0)));
        }
    }
}
