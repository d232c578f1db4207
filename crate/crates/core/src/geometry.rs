//! Unit vectors on the 2-sphere.

use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `|v|² - 1` accepted by [`UnitVec3::new`].
pub const UNIT_TOLERANCE: f64 = 1e-12;

pub(crate) fn dot3(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub(crate) fn cross3(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub(crate) fn norm3(u: [f64; 3]) -> f64 {
    dot3(u, u).sqrt()
}

/// A direction in three dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct UnitVec3 {
    x: f64,
    y: f64,
    z: f64,
}

impl UnitVec3 {
    pub const X: UnitVec3 = UnitVec3 {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    pub const Y: UnitVec3 = UnitVec3 {
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };
    pub const Z: UnitVec3 = UnitVec3 {
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    /// Accepts components already of unit norm.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n2 = x * x + y * y + z * z;
        if !n2.is_finite() || (n2 - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "({x}, {y}, {z}) is not a unit vector (|v|² = {n2})"
            )));
        }
        Ok(UnitVec3 { x, y, z })
    }

    /// Rescales a non-zero vector to unit length.
    pub fn normalize(v: [f64; 3]) -> Result<Self> {
        let n = norm3(v);
        if !n.is_finite() || n == 0.0 {
            return Err(Error::InvalidArgument(format!("cannot normalize {v:?}")));
        }
        Ok(UnitVec3 {
            x: v[0] / n,
            y: v[1] / n,
            z: v[2] / n,
        })
    }

    /// `(sin θ cos φ, sin θ sin φ, cos θ)`.
    pub fn from_spherical(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        UnitVec3 {
            x: st * cp,
            y: st * sp,
            z: ct,
        }
    }

    /// Unit vector in the (x, z)-plane at angle `angle` from `+z` towards `+x`.
    pub fn in_xz_plane(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        UnitVec3 { x: s, y: 0.0, z: c }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &UnitVec3) -> f64 {
        dot3(self.to_array(), other.to_array())
    }

    pub fn dot_raw(&self, v: [f64; 3]) -> f64 {
        dot3(self.to_array(), v)
    }

    /// Angle in `[0, π]`, accurate near both ends.
    pub fn angle_to(&self, other: &UnitVec3) -> f64 {
        let c = cross3(self.to_array(), other.to_array());
        norm3(c).atan2(self.dot(other))
    }

    /// Some unit vector orthogonal to `self`, chosen from the coordinate axis
    /// least aligned with it.
    pub fn any_orthogonal(&self) -> UnitVec3 {
        let v = self.to_array();
        let k = (0..3)
            .min_by(|&i, &j| v[i].abs().total_cmp(&v[j].abs()))
            .unwrap_or(0);
        let mut e = [0.0; 3];
        e[k] = 1.0;
        let d = dot3(e, v);
        let r = [e[0] - d * v[0], e[1] - d * v[1], e[2] - d * v[2]];
        UnitVec3::normalize(r).expect("least aligned axis has a non-zero residual")
    }
}

impl Neg for UnitVec3 {
    type Output = UnitVec3;

    fn neg(self) -> UnitVec3 {
        UnitVec3 {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

impl TryFrom<[f64; 3]> for UnitVec3 {
    type Error = Error;

    fn try_from(v: [f64; 3]) -> Result<Self> {
        UnitVec3::new(v[0], v[1], v[2])
    }
}

impl From<UnitVec3> for [f64; 3] {
    fn from(v: UnitVec3) -> Self {
        v.to_array()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rejects_non_unit() {
        assert!(UnitVec3::new(1.0, 1.0, 0.0).is_err());
        assert!(UnitVec3::normalize([0.0; 3]).is_err());
        assert!(UnitVec3::new(0.6, 0.8, 0.0).is_ok());
    }

    #[test]
    fn angles() {
        let a = UnitVec3::Z;
        assert_eq!(a.angle_to(&a), 0.0);
        assert!((a.angle_to(&-a) - PI).abs() < 1e-15);
        assert!((a.angle_to(&UnitVec3::X) - PI / 2.0).abs() < 1e-15);
        let b = UnitVec3::in_xz_plane(1e-9);
        assert!((a.angle_to(&b) - 1e-9).abs() < 1e-20);
    }

    #[test]
    fn orthogonal_completion() {
        for v in [UnitVec3::X, UnitVec3::Z, UnitVec3::from_spherical(1.1, 2.3)] {
            let o = v.any_orthogonal();
            assert!(v.dot(&o).abs() < 1e-15);
            assert!((o.dot(&o) - 1.0).abs() < 1e-15);
        }
    }
}
