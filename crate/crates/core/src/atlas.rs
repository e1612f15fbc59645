//! Constructors for every named group used by the harness, all realized as
//! permutation groups with documented actions and order self-checks.

use std::sync::OnceLock;

use crate::classes::is_simple_by_normal_closure;
use crate::error::{Error, Result};
use crate::field::{field_make, is_prime_power, FieldSpec};
use crate::group::PermGroup;
use crate::perm::{perm_from_cycles, Perm};
use crate::subgrp::SubgroupRef;

/// Upper bound on n for sym/alt.
const MAX_SYM_DEGREE: u64 = 16;
/// Wreath product degree cap.
const MAX_WREATH_DEGREE: u64 = 64;

fn order_check(g: PermGroup, expected: u128, what: &str) -> Result<PermGroup> {
    if g.order() != expected {
        return Err(Error::internal(format!(
            "{}: computed order {} differs from expected {}",
            what,
            g.order(),
            expected
        )));
    }
    Ok(g)
}

pub fn sym(n: u64) -> Result<PermGroup> {
    if !(1..=MAX_SYM_DEGREE).contains(&n) {
        return Err(Error::rejected(format!("sym({}) out of range 1..=16", n)));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let n32 = n as u32;
    let cycle: Vec<u32> = (0..n32).collect();
    let gens = vec![
        perm_from_cycles(n32, &[&[0, 1]]),
        perm_from_cycles(n32, &[&cycle]),
    ];
    let g = PermGroup::from_generators(n32, gens)?;
    order_check(g, factorial(n), "sym")
}

pub fn alt(n: u64) -> Result<PermGroup> {
    if !(3..=MAX_SYM_DEGREE).contains(&n) {
        return Err(Error::rejected(format!("alt({}) out of range 3..=16", n)));
    }
    let n32 = n as u32;
    let mut gens = vec![perm_from_cycles(n32, &[&[0, 1, 2]])];
    if n % 2 == 1 {
        let cycle: Vec<u32> = (0..n32).collect();
        gens.push(perm_from_cycles(n32, &[&cycle]));
    } else {
        let cycle: Vec<u32> = (1..n32).collect();
        gens.push(perm_from_cycles(n32, &[&cycle]));
    }
    let g = PermGroup::from_generators(n32, gens)?;
    order_check(g, factorial(n) / 2, "alt")
}

pub fn cyclic(n: u64) -> Result<PermGroup> {
    if !(1..=10_000).contains(&n) {
        return Err(Error::rejected(format!("cyclic({}) out of range", n)));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let n32 = n as u32;
    let cycle: Vec<u32> = (0..n32).collect();
    let g = PermGroup::from_generators(n32, vec![perm_from_cycles(n32, &[&cycle])])?;
    order_check(g, n as u128, "cyclic")
}

/// Dihedral group of order 2n on n points (n >= 3).
pub fn dihedral(n: u64) -> Result<PermGroup> {
    if !(3..=10_000).contains(&n) {
        return Err(Error::rejected(format!("dihedral({}) out of range", n)));
    }
    let n32 = n as u32;
    let cycle: Vec<u32> = (0..n32).collect();
    let reflection: Vec<u32> = (0..n32).map(|i| (n32 - i) % n32).collect();
    let g = PermGroup::from_generators(
        n32,
        vec![
            perm_from_cycles(n32, &[&cycle]),
            Perm::from_images(reflection)?,
        ],
    )?;
    order_check(g, 2 * n as u128, "dihedral")
}

/// Quaternion group of order 8 in its regular action.
pub fn quaternion8() -> PermGroup {
    // points: 1,-1,i,-i,j,-j,k,-k; generators are left multiplication by i, j
    let i = Perm::from_images(vec![2, 3, 1, 0, 6, 7, 5, 4]).unwrap();
    let j = Perm::from_images(vec![4, 5, 7, 6, 1, 0, 2, 3]).unwrap();
    let g = PermGroup::from_generators(8, vec![i, j]).unwrap();
    assert_eq!(g.order(), 8, "quaternion table corrupted");
    g
}

/// One-dimensional affine group AGL(1,q) = q:(q-1) on q points.
pub fn agl1(q: u64) -> Result<PermGroup> {
    let (p, f) =
        is_prime_power(q).ok_or_else(|| Error::rejected(format!("{} is not a prime power", q)))?;
    let spec = field_make(p, f)?;
    let qs = spec.size();
    let lam = spec.primitive_element();
    let translate = Perm::from_images(
        (0..qs)
            .map(|i| spec.index(&spec.add(&spec.element(i), &spec.one())) as u32)
            .collect(),
    )?;
    let scale = Perm::from_images(
        (0..qs)
            .map(|i| spec.index(&spec.mul(&spec.element(i), &lam)) as u32)
            .collect(),
    )?;
    let g = PermGroup::from_generators(qs as u32, vec![translate, scale])?;
    order_check(g, (q as u128) * (q as u128 - 1), "agl1")
}

// ---------------------------------------------------------------------------
// PSL2 / PGL2 / PGammaL2 on the projective line
// ---------------------------------------------------------------------------

struct ProjectiveLine {
    spec: FieldSpec,
    q: u64,
}

impl ProjectiveLine {
    fn new(q: u64) -> Result<ProjectiveLine> {
        let (p, f) = is_prime_power(q)
            .ok_or_else(|| Error::rejected(format!("{} is not a prime power", q)))?;
        if !(4..=128).contains(&q) {
            return Err(Error::rejected(format!("psl2({}) out of range 4..=128", q)));
        }
        let spec = field_make(p, f)?;
        Ok(ProjectiveLine { spec, q })
    }

    fn infinity(&self) -> u32 {
        self.q as u32
    }

    /// Permutation of the q+1 points induced by a map on field elements,
    /// with an explicit rule for the point at infinity and for zero.
    fn perm_from_maps(
        &self,
        finite: impl Fn(&FieldSpec, u64) -> Option<u64>, // None means "goes to infinity"
        infinity_to: u32,
    ) -> Result<Perm> {
        let mut img = Vec::with_capacity(self.q as usize + 1);
        for i in 0..self.q {
            match finite(&self.spec, i) {
                Some(v) => img.push(v as u32),
                None => img.push(self.infinity()),
            }
        }
        img.push(infinity_to);
        Perm::from_images(img)
    }

    fn translation(&self) -> Result<Perm> {
        self.perm_from_maps(
            |s, i| Some(s.index(&s.add(&s.element(i), &s.one()))),
            self.infinity(),
        )
    }

    fn scaling(&self, factor: &[u64]) -> Result<Perm> {
        let factor = factor.to_vec();
        self.perm_from_maps(
            move |s, i| Some(s.index(&s.mul(&s.element(i), &factor))),
            self.infinity(),
        )
    }

    /// x -> -1/x, swapping 0 and infinity.
    fn inversion(&self) -> Result<Perm> {
        let mut img = Vec::with_capacity(self.q as usize + 1);
        for i in 0..self.q {
            if i == 0 {
                img.push(self.infinity());
            } else {
                let e = self.spec.element(i);
                let v = self.spec.neg(&self.spec.inv(&e)?);
                img.push(self.spec.index(&v) as u32);
            }
        }
        img.push(0);
        Perm::from_images(img)
    }

    fn frobenius_map(&self) -> Result<Perm> {
        self.perm_from_maps(
            |s, i| Some(s.index(&s.frobenius(&s.element(i)))),
            self.infinity(),
        )
    }
}

fn psl2_gens(line: &ProjectiveLine) -> Result<Vec<Perm>> {
    let lam = line.spec.primitive_element();
    let lam2 = line.spec.mul(&lam, &lam);
    Ok(vec![
        line.translation()?,
        line.scaling(&lam2)?,
        line.inversion()?,
    ])
}

pub fn psl2(q: u64) -> Result<PermGroup> {
    let line = ProjectiveLine::new(q)?;
    let g = PermGroup::from_generators(q as u32 + 1, psl2_gens(&line)?)?;
    let d = if q.is_multiple_of(2) { 1 } else { 2 };
    let expected = (q as u128) * ((q as u128) * (q as u128) - 1) / d;
    order_check(g, expected, "psl2")
}

pub fn pgl2(q: u64) -> Result<PermGroup> {
    let line = ProjectiveLine::new(q)?;
    let mut gens = psl2_gens(&line)?;
    let lam = line.spec.primitive_element();
    gens.push(line.scaling(&lam)?);
    let g = PermGroup::from_generators(q as u32 + 1, gens)?;
    let expected = (q as u128) * ((q as u128) * (q as u128) - 1);
    order_check(g, expected, "pgl2")
}

pub fn pgammal2(q: u64) -> Result<PermGroup> {
    let line = ProjectiveLine::new(q)?;
    let mut gens = psl2_gens(&line)?;
    let lam = line.spec.primitive_element();
    gens.push(line.scaling(&lam)?);
    gens.push(line.frobenius_map()?);
    let g = PermGroup::from_generators(q as u32 + 1, gens)?;
    let f = line.spec.f as u128;
    let expected = f * (q as u128) * ((q as u128) * (q as u128) - 1);
    order_check(g, expected, "pgammal2")
}

// ---------------------------------------------------------------------------
// PSL3(3) on 13 points and its extension by the graph automorphism on 26
// ---------------------------------------------------------------------------

type Mat3 = [[u64; 3]; 3];

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut c = [[0u64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut s = 0;
            for k in 0..3 {
                s += a[i][k] * b[k][j];
            }
            c[i][j] = s % 3;
        }
    }
    c
}

fn mat_det(a: &Mat3) -> u64 {
    let pos =
        a[0][0] * a[1][1] * a[2][2] + a[0][1] * a[1][2] * a[2][0] + a[0][2] * a[1][0] * a[2][1];
    let neg =
        a[0][2] * a[1][1] * a[2][0] + a[0][0] * a[1][2] * a[2][1] + a[0][1] * a[1][0] * a[2][2];
    ((pos % 3) + 3 - (neg % 3)) % 3
}

fn mat_inverse(a: &Mat3) -> Mat3 {
    let det = mat_det(a);
    assert!(det != 0);
    let det_inv = if det == 1 { 1 } else { 2 }; // inverses mod 3
    let cof = |r1: usize, c1: usize, r2: usize, c2: usize| -> u64 {
        ((a[r1][c1] * a[r2][c2]) % 3 + 3 - (a[r1][c2] * a[r2][c1]) % 3) % 3
    };
    let mut adj = [[0u64; 3]; 3];
    // adjugate = transpose of cofactor matrix
    adj[0][0] = cof(1, 1, 2, 2);
    adj[1][0] = (3 - cof(1, 0, 2, 2) % 3) % 3;
    adj[2][0] = cof(1, 0, 2, 1);
    adj[0][1] = (3 - cof(0, 1, 2, 2) % 3) % 3;
    adj[1][1] = cof(0, 0, 2, 2);
    adj[2][1] = (3 - cof(0, 0, 2, 1) % 3) % 3;
    adj[0][2] = cof(0, 1, 1, 2);
    adj[1][2] = (3 - cof(0, 0, 1, 2) % 3) % 3;
    adj[2][2] = cof(0, 0, 1, 1);
    let mut inv = [[0u64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            inv[i][j] = (adj[i][j] * det_inv) % 3;
        }
    }
    debug_assert_eq!(mat_mul(a, &inv), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    inv
}

/// Normalized representatives of the 13 points of PG(2,3), ascending by
/// base-3 value.
fn pg23_points() -> Vec<[u64; 3]> {
    let mut pts = Vec::with_capacity(13);
    for v in 1..27u64 {
        let vec = [(v / 9) % 3, (v / 3) % 3, v % 3];
        let first = vec.iter().find(|&&c| c != 0).copied().unwrap();
        if first == 1 {
            pts.push(vec);
        }
    }
    debug_assert_eq!(pts.len(), 13);
    pts
}

fn pg23_normalize(v: [u64; 3]) -> [u64; 3] {
    let first = v.iter().find(|&&c| c != 0).copied().expect("nonzero");
    let scale = if first == 1 { 1 } else { 2 };
    [(v[0] * scale) % 3, (v[1] * scale) % 3, (v[2] * scale) % 3]
}

fn pg23_index(pts: &[[u64; 3]], v: [u64; 3]) -> u32 {
    let n = pg23_normalize(v);
    pts.iter().position(|&p| p == n).expect("point exists") as u32
}

fn sl33_generators() -> Vec<Mat3> {
    vec![
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
    ]
}

fn point_action(pts: &[[u64; 3]], m: &Mat3) -> Perm {
    let img = pts
        .iter()
        .map(|v| {
            let mut w = [0u64; 3];
            for j in 0..3 {
                w[j] = (v[0] * m[0][j] + v[1] * m[1][j] + v[2] * m[2][j]) % 3;
            }
            pg23_index(pts, w)
        })
        .collect();
    Perm::from_images(img).unwrap()
}

/// PSL3(3) acting on the 13 points of PG(2,3). Order 5616.
pub fn psl3_3() -> Result<PermGroup> {
    let pts = pg23_points();
    let gens = sl33_generators()
        .iter()
        .map(|m| point_action(&pts, m))
        .collect();
    let g = PermGroup::from_generators(13, gens)?;
    order_check(g, 5616, "psl3_3")
}

/// PSL3(3) extended by the inverse-transpose duality, acting on the 13
/// points plus the 13 lines of PG(2,3). Order 11232.
pub fn aut_psl3_3() -> Result<PermGroup> {
    let g = PermGroup::from_generators(26, aut_psl3_3_gens())?;
    order_check(g, 11232, "aut_psl3_3")
}

fn aut_psl3_3_gens() -> Vec<Perm> {
    let pts = pg23_points();
    let mut gens: Vec<Perm> = Vec::new();
    for m in sl33_generators() {
        let minv = mat_inverse(&m);
        let img: Vec<u32> = (0..26u32)
            .map(|i| {
                if i < 13 {
                    // point v -> v * M
                    let v = pts[i as usize];
                    let mut w = [0u64; 3];
                    for j in 0..3 {
                        w[j] = (v[0] * m[0][j] + v[1] * m[1][j] + v[2] * m[2][j]) % 3;
                    }
                    pg23_index(&pts, w)
                } else {
                    // line w -> M^-1 * w (column action keeps incidence)
                    let v = pts[(i - 13) as usize];
                    let mut w = [0u64; 3];
                    for r in 0..3 {
                        w[r] = (minv[r][0] * v[0] + minv[r][1] * v[1] + minv[r][2] * v[2]) % 3;
                    }
                    13 + pg23_index(&pts, w)
                }
            })
            .collect();
        gens.push(Perm::from_images(img).unwrap());
    }
    // duality: point i <-> line i (the identity polarity)
    let dual: Vec<u32> = (0..26u32).map(|i| (i + 13) % 26).collect();
    gens.push(Perm::from_images(dual).unwrap());
    gens
}

/// Anti-flag data in the 26-point action: the point <(1,0,0)> and the line
/// with the same coordinates, which misses it.
pub fn aut_psl3_3_antiflag() -> (u32, u32) {
    let pts = pg23_points();
    let p = pg23_index(&pts, [1, 0, 0]);
    (p, 13 + p)
}

/// Incidence of point i and line 13+j in the 26-point labeling.
pub fn pg23_incident(point: u32, line: u32) -> bool {
    let pts = pg23_points();
    let v = pts[point as usize];
    let w = pts[(line - 13) as usize];
    (v[0] * w[0] + v[1] * w[1] + v[2] * w[2]).is_multiple_of(3)
}

// ---------------------------------------------------------------------------
// Embedded sporadic / classical data: M11 and PSU3(3)
// ---------------------------------------------------------------------------

static M11_CHECKED: OnceLock<()> = OnceLock::new();
static PSU33_CHECKED: OnceLock<()> = OnceLock::new();

/// Mathieu group M11 on 11 points from its standard generator pair,
/// guarded by order and simplicity checks on first use.
pub fn m11() -> Result<PermGroup> {
    let a = perm_from_cycles(11, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]);
    let b = perm_from_cycles(11, &[&[2, 6, 10, 7], &[3, 9, 4, 5]]);
    let g = PermGroup::from_generators(11, vec![a, b])?;
    let g = order_check(g, 7920, "m11 embedded data")?;
    if M11_CHECKED.get().is_none() {
        if !is_simple_by_normal_closure(&g, 10_000)? {
            return Err(Error::internal(
                "m11 simplicity self-check failed".to_string(),
            ));
        }
        let _ = M11_CHECKED.set(());
    }
    Ok(g)
}

/// PSU3(3) on the 28 isotropic points of the hermitian form, from embedded
/// generator permutations (derived from the unitary matrix construction;
/// see tests/psu33_matrix_oracle.rs). Order 6048.
pub fn psu3_3() -> Result<PermGroup> {
    let gens: Vec<Perm> = PSU33_GENS
        .iter()
        .map(|imgs| Perm::from_images(imgs.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::from_generators(28, gens)?;
    let g = order_check(g, 6048, "psu3_3 embedded data")?;
    if PSU33_CHECKED.get().is_none() {
        if !is_simple_by_normal_closure(&g, 10_000)? {
            return Err(Error::internal(
                "psu3_3 simplicity self-check failed".to_string(),
            ));
        }
        let _ = PSU33_CHECKED.set(());
    }
    Ok(g)
}

/// Two root elements, a torus generator and a Weyl reflection of SU3(3),
/// reduced to the 28-point action.
const PSU33_GENS: [[u32; 28]; 4] = [
    [
        0, 4, 5, 6, 7, 8, 9, 1, 2, 3, 15, 13, 14, 18, 16, 17, 12, 10, 11, 23, 24, 22, 26, 27, 25,
        20, 21, 19,
    ],
    [
        0, 13, 14, 15, 17, 18, 16, 12, 10, 11, 24, 22, 23, 25, 26, 27, 20, 21, 19, 5, 6, 4, 9, 7,
        8, 1, 2, 3,
    ],
    [
        0, 1, 3, 2, 13, 15, 14, 25, 27, 26, 16, 18, 17, 19, 21, 20, 4, 6, 5, 22, 24, 23, 7, 9, 8,
        10, 12, 11,
    ],
    [
        1, 0, 3, 2, 7, 23, 15, 4, 17, 27, 19, 14, 18, 13, 11, 6, 16, 8, 12, 10, 26, 24, 22, 5, 21,
        25, 20, 9,
    ],
];

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let da = a.degree();
    let db = b.degree();
    let degree = da + db;
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut img: Vec<u32> = (0..degree).collect();
        for i in 0..da {
            img[i as usize] = g.apply(i);
        }
        gens.push(Perm::from_images(img)?);
    }
    for g in b.generators() {
        let mut img: Vec<u32> = (0..degree).collect();
        for i in 0..db {
            img[(da + i) as usize] = da + g.apply(i);
        }
        gens.push(Perm::from_images(img)?);
    }
    let prod = PermGroup::from_generators(degree, gens)?;
    let expected = a
        .order()
        .checked_mul(b.order())
        .ok_or_else(|| Error::resource("direct product order exceeds u128".to_string()))?;
    order_check(prod, expected, "direct_product")
}

/// Standard (imprimitive) wreath product A wr B on deg(A)*deg(B) points;
/// point (i, j) = j*deg(A) + i.
pub fn wreath_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let da = a.degree() as u64;
    let db = b.degree() as u64;
    if da * db > MAX_WREATH_DEGREE {
        return Err(Error::resource(format!(
            "wreath degree {} exceeds cap {}",
            da * db,
            MAX_WREATH_DEGREE
        )));
    }
    let degree = (da * db) as u32;
    let mut gens = Vec::new();
    for j in 0..db as u32 {
        for g in a.generators() {
            let mut img: Vec<u32> = (0..degree).collect();
            for i in 0..a.degree() {
                img[(j * a.degree() + i) as usize] = j * a.degree() + g.apply(i);
            }
            gens.push(Perm::from_images(img)?);
        }
    }
    for g in b.generators() {
        let mut img: Vec<u32> = vec![0; degree as usize];
        for j in 0..b.degree() {
            for i in 0..a.degree() {
                img[(j * a.degree() + i) as usize] = g.apply(j) * a.degree() + i;
            }
        }
        gens.push(Perm::from_images(img)?);
    }
    let w = PermGroup::from_generators(degree, gens)?;
    let mut expected: u128 = 1;
    for _ in 0..db {
        expected = expected
            .checked_mul(a.order())
            .ok_or_else(|| Error::resource("wreath order exceeds u128".to_string()))?;
    }
    expected = expected
        .checked_mul(b.order())
        .ok_or_else(|| Error::resource("wreath order exceeds u128".to_string()))?;
    order_check(w, expected, "wreath_product")
}

/// {(g, g)} inside G x G.
pub fn diagonal_subgroup(g: &PermGroup) -> Result<SubgroupRef> {
    let ambient = direct_product(g, g)?;
    let degree = ambient.degree();
    let gens = g
        .generators()
        .iter()
        .map(|p| {
            let mut img: Vec<u32> = (0..degree).collect();
            for i in 0..g.degree() {
                img[i as usize] = p.apply(i);
                img[(g.degree() + i) as usize] = g.degree() + p.apply(i);
            }
            Perm::from_images(img)
        })
        .collect::<Result<Vec<_>>>()?;
    let diag = PermGroup::from_generators(degree, gens)?;
    debug_assert_eq!(diag.order(), g.order());
    SubgroupRef::new(ambient, diag)
}

/// The group N L A inside X wr C2: N = S x S, L the diagonal of X x X, A
/// the coordinate swap. Requires S normal of index 2 in X.
pub fn nla_like(s: &PermGroup, x: &PermGroup) -> Result<PermGroup> {
    if s.degree() != x.degree() {
        return Err(Error::rejected(
            "nla: S and X must share a degree".to_string(),
        ));
    }
    for g in s.generators() {
        if !x.is_member(g)? {
            return Err(Error::rejected("nla: S is not a subgroup of X".to_string()));
        }
    }
    if x.order() != 2 * s.order() {
        return Err(Error::rejected(format!(
            "nla: |X:S| must be 2, got {}/{}",
            x.order(),
            s.order()
        )));
    }
    let d = x.degree();
    let degree = 2 * d;
    let mut gens = Vec::new();
    for g in s.generators() {
        // (s, 1)
        let mut img: Vec<u32> = (0..degree).collect();
        for i in 0..d {
            img[i as usize] = g.apply(i);
        }
        gens.push(Perm::from_images(img)?);
    }
    for g in x.generators() {
        // (x, x) in the diagonal L
        let mut img: Vec<u32> = (0..degree).collect();
        for i in 0..d {
            img[i as usize] = g.apply(i);
            img[(d + i) as usize] = d + g.apply(i);
        }
        gens.push(Perm::from_images(img)?);
    }
    gens.push(wreath_swap(d));
    let g = PermGroup::from_generators(degree, gens)?;
    let expected = 2 * s.order() * x.order();
    order_check(g, expected, "nla")
}

/// The coordinate swap of X wr C2 on 2d points.
pub fn wreath_swap(d: u32) -> Perm {
    Perm::from_images((0..2 * d).map(|i| (i + d) % (2 * d)).collect()).unwrap()
}

/// The group N L A for (S, X) = (Alt(5), Sym(5)); order 14400.
pub fn nla_group() -> Result<PermGroup> {
    nla_like(&alt(5)?, &sym(5)?)
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_orders() {
        assert_eq!(sym(5).unwrap().order(), 120);
        assert_eq!(alt(7).unwrap().order(), 2520);
        assert_eq!(cyclic(2).unwrap().order(), 2);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert!(sym(17).is_err());
        assert!(alt(2).is_err());
    }

    #[test]
    fn dihedral_and_quaternion() {
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(dihedral(12).unwrap().order(), 24);
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        // element order histogram of Q8: one identity, one involution, six of order 4
        let mut hist = std::collections::BTreeMap::new();
        for e in q8.elements(100).unwrap() {
            *hist.entry(e.order().unwrap()).or_insert(0u32) += 1;
        }
        assert_eq!(hist.get(&1), Some(&1));
        assert_eq!(hist.get(&2), Some(&1));
        assert_eq!(hist.get(&4), Some(&6));
    }

    #[test]
    fn frobenius_groups() {
        assert_eq!(agl1(5).unwrap().order(), 20);
        assert_eq!(agl1(7).unwrap().order(), 42);
        assert_eq!(agl1(8).unwrap().order(), 56);
    }

    #[test]
    fn psl2_small_orders() {
        assert_eq!(psl2(4).unwrap().order(), 60);
        assert_eq!(psl2(5).unwrap().order(), 60);
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert_eq!(psl2(8).unwrap().order(), 504);
        assert_eq!(psl2(9).unwrap().order(), 360);
        assert_eq!(psl2(11).unwrap().order(), 660);
    }

    #[test]
    fn pgl2_and_pgammal2_orders() {
        assert_eq!(pgl2(7).unwrap().order(), 336);
        assert_eq!(pgl2(11).unwrap().order(), 1320);
        let pg = pgammal2(8).unwrap();
        assert_eq!(pg.order(), 1512);
        // psl2(8) has index 3 in it
        let s = psl2(8).unwrap();
        for g in s.generators() {
            assert!(pg.is_member(g).unwrap());
        }
        assert_eq!(pg.order() / s.order(), 3);
    }

    #[test]
    fn psl2_transitive_on_projective_line() {
        let g = psl2(11).unwrap();
        assert_eq!(g.orbit(0).unwrap().len(), 12);
        assert!(g.is_transitive());
    }

    #[test]
    fn invalid_q_rejected() {
        assert!(psl2(6).is_err());
        assert!(psl2(3).is_err());
        assert!(psl2(256).is_err());
    }

    #[test]
    fn psl33_and_extension() {
        let g = psl3_3().unwrap();
        assert_eq!(g.order(), 5616);
        assert!(g.is_transitive());
        let a = aut_psl3_3().unwrap();
        assert_eq!(a.order(), 11232);
        // the point-line swap forces two orbits to fuse
        assert!(a.is_transitive());
        // psl3_3's action embeds as the even half on 26 points
        let (p, l) = aut_psl3_3_antiflag();
        assert!(p < 13 && (13..26).contains(&l));
        assert!(!pg23_incident(p, l));
    }

    #[test]
    fn m11_loads_and_checks() {
        let g = m11().unwrap();
        assert_eq!(g.order(), 7920);
    }

    #[test]
    fn products() {
        let a5 = alt(5).unwrap();
        let c2 = cyclic(2).unwrap();
        assert_eq!(wreath_product(&a5, &c2).unwrap().order(), 7200);
        assert_eq!(
            wreath_product(&sym(5).unwrap(), &c2).unwrap().order(),
            28800
        );
        assert_eq!(
            direct_product(&sym(3).unwrap(), &sym(3).unwrap())
                .unwrap()
                .order(),
            36
        );
        let d = diagonal_subgroup(&a5).unwrap();
        assert_eq!(d.order(), 60);
        assert_eq!(d.ambient().order(), 3600);
    }

    #[test]
    fn wreath_degree_cap() {
        let s8 = sym(8).unwrap();
        let c16 = cyclic(16).unwrap();
        assert!(wreath_product(&s8, &c16).is_err());
    }

    #[test]
    fn nla_orders() {
        let g = nla_group().unwrap();
        assert_eq!(g.order(), 14400);
        // N = Alt(5) x Alt(5) is inside and normal
        let a5 = alt(5).unwrap();
        let n_gens: Vec<Perm> = {
            let mut v = Vec::new();
            for p in a5.generators() {
                let mut img: Vec<u32> = (0..10).collect();
                for i in 0..5 {
                    img[i as usize] = p.apply(i);
                }
                v.push(Perm::from_images(img).unwrap());
                let mut img2: Vec<u32> = (0..10).collect();
                for i in 0..5 {
                    img2[(5 + i) as usize] = 5 + p.apply(i);
                }
                v.push(Perm::from_images(img2).unwrap());
            }
            v
        };
        let n = PermGroup::from_generators(10, n_gens).unwrap();
        assert_eq!(n.order(), 3600);
        let nref = SubgroupRef::new(g.clone(), n).unwrap();
        assert!(nref.is_normal().unwrap());
        // |G| = |S|^2 * 4 for the psl2(7) flavor
        let g7 = nla_like(&psl2(7).unwrap(), &pgl2(7).unwrap()).unwrap();
        assert_eq!(g7.order(), 168 * 168 * 4);
    }

    #[test]
    fn nla_index_two_enforced() {
        let a5 = alt(5).unwrap();
        assert!(nla_like(&a5, &a5).is_err());
    }
}
