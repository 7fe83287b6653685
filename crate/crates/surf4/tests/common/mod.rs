//! Shared helpers for the integration tests: deterministic RNG, random
//! rigid motions and the test corpus.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use surf4::families::{
    self, MeridianProfile, MeridianSpec, ProfileFn, RotationalSpec, SphericalCurve,
};
use surf4::jets::{Domain, ParamPoint, SurfaceChart};
use surf4::linalg::{det4, Vec4};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random orthogonal 4x4 matrix with determinant +1 (or -1 when
/// `reflect`), by Gram-Schmidt on random columns.
pub fn random_rotation(rng: &mut ChaCha8Rng, reflect: bool) -> [[f64; 4]; 4] {
    loop {
        let mut cols: Vec<Vec4> = Vec::new();
        for _ in 0..4 {
            let mut v = Vec4::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            for c in &cols {
                v = v - *c * v.dot(*c);
            }
            match v.normalized(1e-6) {
                Some(u) => cols.push(u),
                None => break,
            }
        }
        if cols.len() < 4 {
            continue;
        }
        let mut det = det4(cols[0], cols[1], cols[2], cols[3]);
        if (det > 0.0) == reflect {
            cols[3] = -cols[3];
            det = -det;
        }
        debug_assert!((det.abs() - 1.0).abs() < 1e-9);
        let mut m = [[0.0; 4]; 4];
        for (j, c) in cols.iter().enumerate() {
            for i in 0..4 {
                m[i][j] = c.0[i];
            }
        }
        return m;
    }
}

pub fn random_shift(rng: &mut ChaCha8Rng) -> Vec4 {
    Vec4::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
}

/// Uniform random point strictly inside the domain (5% margin).
pub fn random_point(rng: &mut ChaCha8Rng, d: Domain) -> ParamPoint {
    let mu = 0.05 * (d.u1 - d.u0);
    let mv = 0.05 * (d.v1 - d.v0);
    ParamPoint::new(
        rng.gen_range(d.u0 + mu..d.u1 - mu),
        rng.gen_range(d.v0 + mv..d.v1 - mv),
    )
}

pub fn sphere_meridian_spec() -> MeridianSpec {
    MeridianSpec {
        curve: SphericalCurve::circle(1.0),
        profile: MeridianProfile::sphere(),
        v_range: (0.0, 4.0),
    }
}

pub fn case3_rotational_spec() -> RotationalSpec {
    RotationalSpec {
        f: ProfileFn::Identity,
        g: ProfileFn::Power { coeff: 1.0, exponent: 4.0 },
        alpha: 1.0,
        beta: 2.0,
    }
}

pub fn case3_rotational_chart() -> SurfaceChart {
    families::rotational_surface(&case3_rotational_spec(), Domain::new(0.5, 2.0, 0.0, 6.0))
        .unwrap()
}

/// Charts whose invariants the invariance suites sample.
pub fn motion_corpus() -> Vec<(&'static str, SurfaceChart)> {
    vec![
        ("clifford(1,1)", families::clifford(1.0, 1.0)),
        ("clifford(1,0.6)", families::clifford(1.0, 0.6)),
        ("wsq", families::wsq()),
        ("sphere3", families::sphere3()),
        (
            "meridian_sphere",
            families::meridian_surface(&sphere_meridian_spec()).unwrap(),
        ),
        ("rotational_case3", case3_rotational_chart()),
    ]
}
