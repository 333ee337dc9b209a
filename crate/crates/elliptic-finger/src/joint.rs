//! Geometry of a single elliptic joint.
//!
//! The origin of the moving frame rides an ellipse centred on the joint's
//! centre of rotation. At rest (`theta = 0`) it sits on the longitudinal
//! (z) axis; as the joint rotates, the in-plane transverse coordinate is
//! `u = z * tan(theta)` and `(u, z)` stays on the ellipse. The frame itself
//! rotates by `phi = atan(k * tan(theta))` with `k` the squared ratio of the
//! transverse to the longitudinal semi-axis, so `phi == theta` only for a
//! circular joint.

use nalgebra::{Matrix3, Matrix4, Vector3};
use std::f64::consts::FRAC_PI_2;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JointError {
    #[error("joint angle {theta} rad is outside the open domain (-pi/2, pi/2)")]
    Domain { theta: f64 },
    #[error("invalid ellipse semi-axes: major={major}, minor={minor} (need major >= minor > 0)")]
    Axes { major: f64, minor: f64 },
}

/// Semi-major and semi-minor lengths (mm) of one joint's articular ellipse.
///
/// `major == minor` degenerates the joint to an ordinary revolute joint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseAxes {
    major: f64,
    minor: f64,
}

impl EllipseAxes {
    pub fn new(major: f64, minor: f64) -> Result<Self, JointError> {
        if !(minor > 0.0) || !(major >= minor) {
            return Err(JointError::Axes { major, minor });
        }
        Ok(Self { major, minor })
    }

    /// A circular joint of the given radius.
    pub fn circular(radius: f64) -> Result<Self, JointError> {
        Self::new(radius, radius)
    }

    pub fn major(&self) -> f64 {
        self.major
    }

    pub fn minor(&self) -> f64 {
        self.minor
    }

    pub fn is_circular(&self) -> bool {
        self.major == self.minor
    }
}

/// Which anatomical plane the joint moves in.
///
/// Adduction/abduction acts on the x-z plane of the parent frame,
/// flexion/extension on the y-z plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JointPlane {
    AdAb,
    FlexExt,
}

/// Assignment of the ellipse semi-axes to the motion plane.
///
/// `MajorTransverse` puts the major axis along the in-plane transverse
/// direction (the default); `MajorLongitudinal` puts it along the rest (z)
/// axis. Both conventions appear in the literature for condylar joints, so
/// the choice is exposed rather than hard-coded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AxisOrientation {
    #[default]
    MajorTransverse,
    MajorLongitudinal,
}

impl AxisOrientation {
    /// (transverse, longitudinal) semi-axis lengths under this convention.
    fn plane_axes(self, axes: EllipseAxes) -> (f64, f64) {
        match self {
            AxisOrientation::MajorTransverse => (axes.major, axes.minor),
            AxisOrientation::MajorLongitudinal => (axes.minor, axes.major),
        }
    }

    /// The tangent scaling factor `k` in `phi = atan(k * tan(theta))`.
    fn tangent_ratio(self, axes: EllipseAxes) -> f64 {
        let (a, b) = self.plane_axes(axes);
        (a / b) * (a / b)
    }
}

/// Joint rotation angle (radians), restricted to the open interval
/// (-pi/2, pi/2) where `tan` is finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct JointAngle(f64);

impl JointAngle {
    pub const ZERO: JointAngle = JointAngle(0.0);

    pub fn from_radians(theta: f64) -> Result<Self, JointError> {
        if theta.is_finite() && theta.abs() < FRAC_PI_2 {
            Ok(Self(theta))
        } else {
            Err(JointError::Domain { theta })
        }
    }

    pub fn from_degrees(deg: f64) -> Result<Self, JointError> {
        Self::from_radians(deg.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Rotation angle of the moving coordinate frame (radians). A function of the
/// joint angle; equal to it only for circular joints.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FrameAngle(f64);

impl FrameAngle {
    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Rigid transform (rotation + translation), the upper 3x4 block of a 4x4
/// homogeneous matrix with implicit bottom row `[0 0 0 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomTransform {
    pub rotation: Matrix3<f64>,
    pub translation: Vector3<f64>,
}

impl HomTransform {
    pub fn identity() -> Self {
        Self {
            rotation: Matrix3::identity(),
            translation: Vector3::zeros(),
        }
    }

    pub fn transform_point(&self, p: &Vector3<f64>) -> Vector3<f64> {
        self.rotation * p + self.translation
    }

    /// Composition: `(a * b).transform_point(p) == a.transform_point(b.transform_point(p))`.
    pub fn compose(&self, other: &HomTransform) -> HomTransform {
        HomTransform {
            rotation: self.rotation * other.rotation,
            translation: self.rotation * other.translation + self.translation,
        }
    }

    pub fn inverse(&self) -> HomTransform {
        let rt = self.rotation.transpose();
        HomTransform {
            rotation: rt,
            translation: -(rt * self.translation),
        }
    }

    pub fn to_homogeneous(&self) -> Matrix4<f64> {
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 3>(0, 0).copy_from(&self.rotation);
        m.fixed_view_mut::<3, 1>(0, 3).copy_from(&self.translation);
        m
    }
}

impl std::ops::Mul for HomTransform {
    type Output = HomTransform;

    fn mul(self, rhs: HomTransform) -> HomTransform {
        self.compose(&rhs)
    }
}

/// Origin of the moving frame expressed in the parent frame (mm).
///
/// The returned point lies exactly on the joint ellipse: with `(a, b)` the
/// (transverse, longitudinal) semi-axes, the longitudinal coordinate is
/// `z = a*b / sqrt(b^2 tan^2(theta) + a^2)` and the transverse one is
/// `u = z * tan(theta)`. The out-of-plane coordinate is zero.
pub fn ellipse_offset(
    axes: EllipseAxes,
    angle: JointAngle,
    plane: JointPlane,
    orientation: AxisOrientation,
) -> Vector3<f64> {
    let (a, b) = orientation.plane_axes(axes);
    let t = angle.radians().tan();
    let z = a * b / (b * b * t * t + a * a).sqrt();
    let u = z * t;
    match plane {
        JointPlane::AdAb => Vector3::new(u, 0.0, z),
        JointPlane::FlexExt => Vector3::new(0.0, u, z),
    }
}

/// Rotation angle of the moving frame: `phi = atan(k * tan(theta))` with
/// `k = (transverse / longitudinal)^2`. Strictly increasing in `theta`, odd,
/// and equal to `theta` when the joint is circular.
pub fn frame_angle(
    axes: EllipseAxes,
    angle: JointAngle,
    plane: JointPlane,
    orientation: AxisOrientation,
) -> FrameAngle {
    let _ = plane; // same convention on both planes; kept for call-site symmetry
    let k = orientation.tangent_ratio(axes);
    FrameAngle((k * angle.radians().tan()).atan())
}

/// Full joint transform: elementary rotation by `phi` about the plane normal
/// plus the ellipse offset and the parent-frame bone offset `(0, 0, bone)`.
///
/// Positive `theta` moves the offset toward +x (abduction) on the Ad/Ab plane
/// and toward +y (flexion) on the F/E plane; the rotation tilts the child
/// z-axis the same way, so a circular joint reproduces a standard revolute
/// joint with a radial link.
pub fn joint_transform(
    axes: EllipseAxes,
    angle: JointAngle,
    plane: JointPlane,
    orientation: AxisOrientation,
    bone_length: f64,
) -> HomTransform {
    debug_assert!(bone_length >= 0.0);
    let phi = frame_angle(axes, angle, plane, orientation).radians();
    let rotation = plane_rotation(plane, phi);
    let translation =
        ellipse_offset(axes, angle, plane, orientation) + Vector3::new(0.0, 0.0, bone_length);
    HomTransform {
        rotation,
        translation,
    }
}

/// Elementary rotation tilting the child z-axis by `phi` into the motion
/// plane: about +y for Ad/Ab, about -x for F/E.
fn plane_rotation(plane: JointPlane, phi: f64) -> Matrix3<f64> {
    let (s, c) = phi.sin_cos();
    match plane {
        JointPlane::AdAb => Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c),
        JointPlane::FlexExt => Matrix3::new(1.0, 0.0, 0.0, 0.0, c, s, 0.0, -s, c),
    }
}

/// Derivative of a joint transform with respect to the joint angle.
#[derive(Debug, Clone)]
pub(crate) struct JointDerivative {
    pub d_rotation: Matrix3<f64>,
    pub d_translation: Vector3<f64>,
}

/// Analytic d(transform)/d(theta); the bone offset is constant and drops out.
pub(crate) fn joint_transform_derivative(
    axes: EllipseAxes,
    theta: f64,
    plane: JointPlane,
    orientation: AxisOrientation,
) -> JointDerivative {
    let (a, b) = orientation.plane_axes(axes);
    let k = orientation.tangent_ratio(axes);
    let t = theta.tan();
    let sec2 = 1.0 + t * t;

    let v = b * b * t * t + a * a;
    let z = a * b / v.sqrt();
    let dz = -a * b * b * b * t * sec2 / v.powf(1.5);
    let du = dz * t + z * sec2;

    let phi = (k * t).atan();
    let dphi = k * sec2 / (1.0 + k * k * t * t);

    let (s, c) = phi.sin_cos();
    let (d_rotation, d_translation) = match plane {
        JointPlane::AdAb => (
            Matrix3::new(-s, 0.0, c, 0.0, 0.0, 0.0, -c, 0.0, -s) * dphi,
            Vector3::new(du, 0.0, dz),
        ),
        JointPlane::FlexExt => (
            Matrix3::new(0.0, 0.0, 0.0, 0.0, -s, c, 0.0, -c, -s) * dphi,
            Vector3::new(0.0, du, dz),
        ),
    };
    JointDerivative {
        d_rotation,
        d_translation,
    }
}
