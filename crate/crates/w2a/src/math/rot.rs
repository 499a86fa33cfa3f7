use rand::Rng;

use crate::math::{MathError, UnitVec3, Vec3};
use crate::scalar::Scalar;

/// Proper rotation matrix, row-major storage.
///
/// Gripper poses store their frame axes as the matrix columns in the order
/// (left, up, forward).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rot3<S> {
    m: [[S; 3]; 3],
}

/// Continuous 6D rotation representation: the first two columns of a
/// rotation matrix, possibly un-normalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rot6d<S> {
    pub a1: Vec3<S>,
    pub a2: Vec3<S>,
}

impl<S: Scalar> Rot3<S> {
    pub fn identity() -> Self {
        let o = S::one();
        let z = S::zero();
        Self {
            m: [[o, z, z], [z, o, z], [z, z, o]],
        }
    }

    /// Builds from three column vectors. Caller guarantees orthonormality.
    pub fn from_columns(c0: Vec3<S>, c1: Vec3<S>, c2: Vec3<S>) -> Self {
        Self {
            m: [
                [c0.x, c1.x, c2.x],
                [c0.y, c1.y, c2.y],
                [c0.z, c1.z, c2.z],
            ],
        }
    }

    pub fn from_rows(r0: [S; 3], r1: [S; 3], r2: [S; 3]) -> Self {
        Self { m: [r0, r1, r2] }
    }

    /// Rodrigues rotation about a unit axis.
    pub fn from_axis_angle(axis: UnitVec3<S>, angle: S) -> Self {
        let a = axis.as_vec();
        let (s, c) = (angle.sin(), angle.cos());
        let t = S::one() - c;
        Self {
            m: [
                [t * a.x * a.x + c, t * a.x * a.y - s * a.z, t * a.x * a.z + s * a.y],
                [t * a.x * a.y + s * a.z, t * a.y * a.y + c, t * a.y * a.z - s * a.x],
                [t * a.x * a.z - s * a.y, t * a.y * a.z + s * a.x, t * a.z * a.z + c],
            ],
        }
    }

    pub fn column(&self, j: usize) -> Vec3<S> {
        Vec3::new(self.m[0][j], self.m[1][j], self.m[2][j])
    }

    pub fn entry(&self, i: usize, j: usize) -> S {
        self.m[i][j]
    }

    pub fn apply(&self, v: Vec3<S>) -> Vec3<S> {
        Vec3::new(
            self.m[0][0] * v.x + self.m[0][1] * v.y + self.m[0][2] * v.z,
            self.m[1][0] * v.x + self.m[1][1] * v.y + self.m[1][2] * v.z,
            self.m[2][0] * v.x + self.m[2][1] * v.y + self.m[2][2] * v.z,
        )
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Self {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = [[S::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = S::zero();
                for k in 0..3 {
                    acc += self.m[i][k] * other.m[k][j];
                }
                *cell = acc;
            }
        }
        Self { m: out }
    }

    pub fn trace(&self) -> S {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn det(&self) -> S {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Max absolute entry of `mᵀm − I`; 0 for a perfect rotation.
    pub fn orthonormality_error(&self) -> S {
        let gram = self.transpose().compose(self);
        let mut worst = S::zero();
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { S::one() } else { S::zero() };
                worst = worst.max((gram.m[i][j] - target).abs());
            }
        }
        worst
    }

    pub fn is_valid(&self, tol: S) -> bool {
        self.orthonormality_error() <= tol && (self.det() - S::one()).abs() <= tol
    }

    /// Row-major flattening, 9 entries.
    pub fn to_row_major(&self) -> [S; 9] {
        let m = &self.m;
        [
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
        ]
    }

    pub fn from_row_major(v: [S; 9]) -> Self {
        Self {
            m: [[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]],
        }
    }

    /// Unit quaternion (w, x, y, z) equivalent. Shepperd's method.
    pub fn to_quaternion(&self) -> [S; 4] {
        let m = &self.m;
        let quarter = S::from_f64(0.25);
        let tr = self.trace();
        if tr > S::zero() {
            let s = (tr + S::one()).sqrt() * S::from_f64(2.0);
            [
                quarter * s,
                (m[2][1] - m[1][2]) / s,
                (m[0][2] - m[2][0]) / s,
                (m[1][0] - m[0][1]) / s,
            ]
        } else if m[0][0] > m[1][1] && m[0][0] > m[2][2] {
            let s = (S::one() + m[0][0] - m[1][1] - m[2][2]).sqrt() * S::from_f64(2.0);
            [
                (m[2][1] - m[1][2]) / s,
                quarter * s,
                (m[0][1] + m[1][0]) / s,
                (m[0][2] + m[2][0]) / s,
            ]
        } else if m[1][1] > m[2][2] {
            let s = (S::one() + m[1][1] - m[0][0] - m[2][2]).sqrt() * S::from_f64(2.0);
            [
                (m[0][2] - m[2][0]) / s,
                (m[0][1] + m[1][0]) / s,
                quarter * s,
                (m[1][2] + m[2][1]) / s,
            ]
        } else {
            let s = (S::one() + m[2][2] - m[0][0] - m[1][1]).sqrt() * S::from_f64(2.0);
            [
                (m[1][0] - m[0][1]) / s,
                (m[0][2] + m[2][0]) / s,
                (m[1][2] + m[2][1]) / s,
                quarter * s,
            ]
        }
    }

    /// First two columns as the canonical 6D embedding.
    pub fn to_ortho6d(&self) -> Rot6d<S> {
        Rot6d {
            a1: self.column(0),
            a2: self.column(1),
        }
    }

    pub fn serialize_le(&self) -> [u8; 72] {
        let mut out = [0u8; 72];
        for (i, v) in self.to_row_major().iter().enumerate() {
            out[i * 8..i * 8 + 8].copy_from_slice(&v.to_f64().to_le_bytes());
        }
        out
    }

    pub fn deserialize_le(bytes: &[u8; 72]) -> Self {
        let mut v = [S::zero(); 9];
        for (i, cell) in v.iter_mut().enumerate() {
            let mut b = [0u8; 8];
            b.copy_from_slice(&bytes[i * 8..i * 8 + 8]);
            *cell = S::from_f64(f64::from_le_bytes(b));
        }
        Self::from_row_major(v)
    }

    pub fn cast<T: Scalar>(&self) -> Rot3<T> {
        let v = self.to_row_major().map(|s| T::from_f64(s.to_f64()));
        Rot3::from_row_major(v)
    }
}

impl<S: Scalar> Rot6d<S> {
    pub fn new(a1: Vec3<S>, a2: Vec3<S>) -> Self {
        Self { a1, a2 }
    }

    pub fn from_array(v: [S; 6]) -> Self {
        Self {
            a1: Vec3::new(v[0], v[1], v[2]),
            a2: Vec3::new(v[3], v[4], v[5]),
        }
    }

    pub fn to_array(&self) -> [S; 6] {
        [self.a1.x, self.a1.y, self.a1.z, self.a2.x, self.a2.y, self.a2.z]
    }

    /// Gram-Schmidt recovery of the full rotation:
    /// b1 = a1/|a1|, b2 = normalize(a2 − (b1·a2) b1), b3 = b1 × b2,
    /// returned as columns (b1, b2, b3).
    pub fn to_rot(&self) -> Result<Rot3<S>, MathError> {
        let b1 = self.a1.normalized().map_err(|_| MathError::DegenerateInput)?;
        let proj = self.a2 - b1.as_vec().scale(b1.dot(self.a2));
        let b2 = proj.normalized().map_err(|_| MathError::DegenerateInput)?;
        let b3 = b1.as_vec().cross(b2.as_vec());
        Ok(Rot3::from_columns(b1.as_vec(), b2.as_vec(), b3))
    }

    pub fn serialize_le(&self) -> [u8; 48] {
        let mut out = [0u8; 48];
        for (i, v) in self.to_array().iter().enumerate() {
            out[i * 8..i * 8 + 8].copy_from_slice(&v.to_f64().to_le_bytes());
        }
        out
    }

    pub fn cast<T: Scalar>(&self) -> Rot6d<T> {
        Rot6d::from_array(self.to_array().map(|s| T::from_f64(s.to_f64())))
    }
}

/// Geodesic angle between two rotations, in [0, pi]. The arccos argument is
/// clamped to absorb floating-point drift.
pub fn rot_distance<S: Scalar>(r1: &Rot3<S>, r2: &Rot3<S>) -> S {
    let c = (r1.transpose().compose(r2).trace() - S::one()) / S::from_f64(2.0);
    c.max(-S::one()).min(S::one()).acos()
}

/// Plain L2 distance between raw 6D embeddings, the optional alternative to
/// the geodesic metric.
pub fn rot6d_distance<S: Scalar>(a: &Rot6d<S>, b: &Rot6d<S>) -> S {
    let av = a.to_array();
    let bv = b.to_array();
    let mut acc = S::zero();
    for i in 0..6 {
        let d = av[i] - bv[i];
        acc += d * d;
    }
    acc.sqrt()
}

/// Uniform random rotation: forward axis uniform on the sphere, roll about
/// it uniform in [0, 2pi).
pub fn sample_uniform_rotation<S: Scalar, R: Rng>(rng: &mut R) -> Rot3<S> {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    let forward = Vec3::new(
        S::from_f64(r * phi.cos()),
        S::from_f64(r * phi.sin()),
        S::from_f64(z),
    );
    let forward = UnitVec3::new(forward).expect("unit by construction");
    let roll: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    rotation_with_forward(forward, S::from_f64(roll))
}

/// Gripper rotation whose forward axis (third column) points into the
/// surface: forward·n < 0, uniform over that hemisphere, roll uniform.
pub fn sample_hemisphere_rotation<S: Scalar, R: Rng>(n: UnitVec3<S>, rng: &mut R) -> Rot3<S> {
    loop {
        let rot = sample_uniform_rotation::<S, R>(rng);
        let f = rot.column(2);
        let d = n.dot(f);
        if d < S::zero() {
            return rot;
        }
        if d > S::zero() {
            // Mirror into the valid hemisphere; preserves uniformity.
            let f = UnitVec3::new_unchecked(-f);
            let roll: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            return rotation_with_forward(f, S::from_f64(roll));
        }
        // f·n == 0 exactly: resample.
    }
}

/// Completes a forward axis to a proper rotation with the given roll about
/// it; columns ordered (left, up, forward).
pub fn rotation_with_forward<S: Scalar>(forward: UnitVec3<S>, roll: S) -> Rot3<S> {
    let e1 = forward.any_orthogonal().as_vec();
    let e2 = forward.as_vec().cross(e1);
    let left = e1.scale(roll.cos()) + e2.scale(roll.sin());
    let up = forward.as_vec().cross(left);
    Rot3::from_columns(left, up, forward.as_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_rot6d(rng: &mut ChaCha8Rng) -> Rot6d<f64> {
        Rot6d::new(
            Vec3::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            ),
            Vec3::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            ),
        )
    }

    pub(crate) fn random_rotation(rng: &mut ChaCha8Rng) -> Rot3<f64> {
        loop {
            if let Ok(r) = random_rot6d(rng).to_rot() {
                return r;
            }
        }
    }

    /// Independent oracle: angle via the quaternion double cover,
    /// theta = 2*atan2(|imag|, |w|).
    fn quaternion_angle(r1: &Rot3<f64>, r2: &Rot3<f64>) -> f64 {
        let rel = r1.transpose().compose(r2);
        let q = rel.to_quaternion();
        let imag = (q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
        2.0 * imag.atan2(q[0].abs())
    }

    #[test]
    fn ortho6d_already_orthonormal_gives_identity() {
        let r = Rot6d::new(Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0))
            .to_rot()
            .unwrap();
        assert!(rot_distance(&r, &Rot3::identity()) < 1e-12);
    }

    #[test]
    fn ortho6d_hand_gram_schmidt() {
        let r = Rot6d::new(Vec3::new(2.0, 0.0, 0.0), Vec3::new(1.0, 1.0, 0.0))
            .to_rot()
            .unwrap();
        assert!(r.column(0).distance(Vec3::new(1.0, 0.0, 0.0)) < 1e-12);
        assert!(r.column(1).distance(Vec3::new(0.0, 1.0, 0.0)) < 1e-12);
        assert!(r.column(2).distance(Vec3::new(0.0, 0.0, 1.0)) < 1e-12);
    }

    #[test]
    fn ortho6d_degenerate_inputs_rejected() {
        let zero = Rot6d::new(Vec3::zero(), Vec3::new(0.0, 1.0, 0.0));
        assert_eq!(zero.to_rot().unwrap_err(), MathError::DegenerateInput);
        let parallel = Rot6d::new(Vec3::new(1.0, 0.0, 0.0), Vec3::new(2.0, 0.0, 0.0));
        assert_eq!(parallel.to_rot().unwrap_err(), MathError::DegenerateInput);
    }

    #[test]
    fn ortho6d_outputs_are_proper_rotations() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut checked = 0;
        while checked < 1000 {
            let Ok(r) = random_rot6d(&mut rng).to_rot() else {
                continue;
            };
            assert!(r.is_valid(1e-6), "orthonormality/det drift");
            checked += 1;
        }
    }

    #[test]
    fn rot_to_ortho6d_identity_and_z90() {
        let id6 = Rot3::<f64>::identity().to_ortho6d();
        assert!(id6.a1.distance(Vec3::new(1.0, 0.0, 0.0)) < 1e-15);
        assert!(id6.a2.distance(Vec3::new(0.0, 1.0, 0.0)) < 1e-15);

        let z90 = Rot3::from_axis_angle(UnitVec3::z_axis(), std::f64::consts::FRAC_PI_2);
        let e = z90.to_ortho6d();
        assert!(e.a1.distance(Vec3::new(0.0, 1.0, 0.0)) < 1e-12);
        assert!(e.a2.distance(Vec3::new(-1.0, 0.0, 0.0)) < 1e-12);
    }

    #[test]
    fn round_trip_rot_6d_rot() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..1000 {
            let r = random_rotation(&mut rng);
            let back = r.to_ortho6d().to_rot().unwrap();
            assert!(rot_distance(&r, &back) < 1e-6);
        }
    }

    #[test]
    fn distance_zero_and_pi() {
        let r = Rot3::<f64>::from_axis_angle(UnitVec3::y_axis(), 0.4);
        assert!(rot_distance(&r, &r) < 1e-9);
        let zpi = Rot3::from_axis_angle(UnitVec3::z_axis(), std::f64::consts::PI);
        assert!((rot_distance(&Rot3::identity(), &zpi) - std::f64::consts::PI).abs() < 1e-9);
    }

    #[test]
    fn distance_matches_quaternion_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let r1 = random_rotation(&mut rng);
            let r2 = random_rotation(&mut rng);
            let d = rot_distance(&r1, &r2);
            let q = quaternion_angle(&r1, &r2);
            assert!((d - q).abs() < 1e-6, "geodesic {d} vs quaternion {q}");
        }
    }

    #[test]
    fn distance_symmetry_and_triangle() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..300 {
            let a = random_rotation(&mut rng);
            let b = random_rotation(&mut rng);
            let c = random_rotation(&mut rng);
            let ab = rot_distance(&a, &b);
            let ba = rot_distance(&b, &a);
            assert!((ab - ba).abs() < 1e-9);
            let ac = rot_distance(&a, &c);
            let cb = rot_distance(&c, &b);
            assert!(ab <= ac + cb + 1e-9);
        }
    }

    #[test]
    fn hemisphere_forward_always_points_in() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = UnitVec3::<f64>::z_axis();
        for _ in 0..10_000 {
            let r = sample_hemisphere_rotation(n, &mut rng);
            assert!(r.column(2).z < 0.0);
            assert!(r.is_valid(1e-9));
        }
    }

    #[test]
    fn hemisphere_sampling_is_deterministic() {
        let n = Vec3::new(0.3, -0.5, 0.8).normalized().unwrap();
        let a = sample_hemisphere_rotation::<f64, _>(n, &mut ChaCha8Rng::seed_from_u64(9));
        let b = sample_hemisphere_rotation::<f64, _>(n, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a.to_row_major(), b.to_row_major());
    }

    #[test]
    fn hemisphere_forward_centroid_matches_uniform_cap() {
        // Uniform hemisphere below the tangent plane has centroid -n/2.
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let n = Vec3::new(1.0, 1.0, 1.0).normalized().unwrap();
        let mut acc = Vec3::<f64>::zero();
        let draws = 100_000;
        for _ in 0..draws {
            acc = acc + sample_hemisphere_rotation(n, &mut rng).column(2);
        }
        let mean = acc.scale(1.0 / draws as f64);
        let expected = -n.as_vec().scale(0.5);
        assert!(
            mean.distance(expected) < 0.02,
            "centroid {mean:?} vs {expected:?}"
        );
    }

    #[test]
    fn serialization_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let r = random_rotation(&mut rng);
        let back = Rot3::<f64>::deserialize_le(&r.serialize_le());
        assert_eq!(r.to_row_major(), back.to_row_major());
    }
}
