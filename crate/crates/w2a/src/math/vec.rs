use crate::math::MathError;
use crate::scalar::Scalar;

/// Plain 3-vector over a generic scalar.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Vec3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero())
    }

    pub fn splat(v: S) -> Self {
        Self::new(v, v, v)
    }

    pub fn from_array(a: [S; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [S; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(self, o: Self) -> S {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> S {
        self.dot(self).sqrt()
    }

    pub fn norm_sq(self) -> S {
        self.dot(self)
    }

    pub fn scale(self, k: S) -> Self {
        Self::new(self.x * k, self.y * k, self.z * k)
    }

    pub fn normalized(self) -> Result<UnitVec3<S>, MathError> {
        UnitVec3::new(self)
    }

    pub fn distance(self, o: Self) -> S {
        (self - o).norm()
    }

    /// Component-wise absolute value.
    pub fn abs(self) -> Self {
        Self::new(self.x.abs(), self.y.abs(), self.z.abs())
    }

    pub fn max_component(self) -> S {
        self.x.max(self.y).max(self.z)
    }

    pub fn cast<T: Scalar>(self) -> Vec3<T> {
        Vec3::new(
            T::from_f64(self.x.to_f64()),
            T::from_f64(self.y.to_f64()),
            T::from_f64(self.z.to_f64()),
        )
    }
}

impl<S: Scalar> std::ops::Add for Vec3<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<S: Scalar> std::ops::Sub for Vec3<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<S: Scalar> std::ops::Neg for Vec3<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

/// Unit-norm 3-vector (surface normals, motion and approach directions).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVec3<S>(Vec3<S>);

impl<S: Scalar> UnitVec3<S> {
    const NORM_TOL: f64 = 1e-9;

    /// Normalizes `v`; fails if its norm is within 1e-9 of zero.
    pub fn new(v: Vec3<S>) -> Result<Self, MathError> {
        let n = v.norm();
        if n.to_f64() < Self::NORM_TOL {
            return Err(MathError::ZeroVector);
        }
        Ok(Self(v.scale(S::one() / n)))
    }

    /// Wraps a vector already known to have unit norm.
    pub fn new_unchecked(v: Vec3<S>) -> Self {
        debug_assert!((v.norm().to_f64() - 1.0).abs() < 1e-6);
        Self(v)
    }

    pub fn x_axis() -> Self {
        Self(Vec3::new(S::one(), S::zero(), S::zero()))
    }

    pub fn y_axis() -> Self {
        Self(Vec3::new(S::zero(), S::one(), S::zero()))
    }

    pub fn z_axis() -> Self {
        Self(Vec3::new(S::zero(), S::zero(), S::one()))
    }

    pub fn as_vec(self) -> Vec3<S> {
        self.0
    }

    pub fn dot(self, o: Vec3<S>) -> S {
        self.0.dot(o)
    }

    /// Angle to another unit vector, in [0, pi].
    pub fn angle_to(self, o: Self) -> S {
        let c = self.0.dot(o.0).max(-S::one()).min(S::one());
        c.acos()
    }

    /// Some unit vector orthogonal to this one (deterministic choice).
    pub fn any_orthogonal(self) -> Self {
        let v = self.0;
        // Cross against the axis we are least aligned with.
        let ax = v.x.abs();
        let ay = v.y.abs();
        let az = v.z.abs();
        let basis = if ax <= ay && ax <= az {
            Vec3::new(S::one(), S::zero(), S::zero())
        } else if ay <= az {
            Vec3::new(S::zero(), S::one(), S::zero())
        } else {
            Vec3::new(S::zero(), S::zero(), S::one())
        };
        Self::new(v.cross(basis)).expect("cross with non-parallel axis is nonzero")
    }
}

impl<S: Scalar> std::ops::Neg for UnitVec3<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

/// Rigid transform: rotation followed by translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform<S> {
    pub rot: super::Rot3<S>,
    pub trans: Vec3<S>,
}

impl<S: Scalar> Transform<S> {
    pub fn identity() -> Self {
        Self {
            rot: super::Rot3::identity(),
            trans: Vec3::zero(),
        }
    }

    pub fn from_translation(t: Vec3<S>) -> Self {
        Self {
            rot: super::Rot3::identity(),
            trans: t,
        }
    }

    /// Rotation by `rot` about the pivot point `anchor`.
    pub fn rotation_about(rot: super::Rot3<S>, anchor: Vec3<S>) -> Self {
        let t = anchor - rot.apply(anchor);
        Self { rot, trans: t }
    }

    pub fn apply(&self, p: Vec3<S>) -> Vec3<S> {
        self.rot.apply(p) + self.trans
    }

    pub fn apply_dir(&self, d: Vec3<S>) -> Vec3<S> {
        self.rot.apply(d)
    }

    /// `self` then... composes so that `(a * b).apply(p) = a.apply(b.apply(p))`.
    pub fn compose(&self, inner: &Self) -> Self {
        Self {
            rot: self.rot.compose(&inner.rot),
            trans: self.rot.apply(inner.trans) + self.trans,
        }
    }

    pub fn inverse(&self) -> Self {
        let rinv = self.rot.transpose();
        Self {
            rot: rinv,
            trans: -rinv.apply(self.trans),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vec_rejects_zero() {
        assert_eq!(
            Vec3::<f64>::new(0.0, 0.0, 1e-12).normalized(),
            Err(MathError::ZeroVector)
        );
    }

    #[test]
    fn any_orthogonal_is_orthogonal() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let v = Vec3::new(
                rng.gen_range(-1.0..1.0f64),
                rng.gen_range(-1.0..1.0f64),
                rng.gen_range(-1.0..1.0f64),
            );
            let Ok(u) = v.normalized() else { continue };
            let o = u.any_orthogonal();
            assert!(u.dot(o.as_vec()).abs() < 1e-12);
            assert!((o.as_vec().norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn transform_composition_and_inverse() {
        let r = crate::Rot3::from_axis_angle(UnitVec3::z_axis(), std::f64::consts::FRAC_PI_2);
        let a = Transform {
            rot: r,
            trans: Vec3::new(1.0, 2.0, 3.0),
        };
        let b = Transform::from_translation(Vec3::new(0.5, 0.0, 0.0));
        let p = Vec3::new(0.1, -0.2, 0.7);
        let q = a.compose(&b).apply(p);
        let q2 = a.apply(b.apply(p));
        assert!(q.distance(q2) < 1e-12);
        let back = a.inverse().apply(a.apply(p));
        assert!(back.distance(p) < 1e-12);
    }
}
