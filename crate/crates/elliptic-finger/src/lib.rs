//! Kinematics of a 4-DoF human-like finger whose joints trace elliptic arcs.
//!
//! A conventional revolute joint rotates the next bone about a fixed axis, so
//! the moving frame only rotates. An elliptic joint also translates: the
//! origin of the next frame rides an ellipse around the joint centre, and the
//! frame rotation angle differs from the joint rotation angle unless the
//! ellipse degenerates to a circle. This crate models a finger as a chain of
//! four such joints (one adduction/abduction, three flexion/extension),
//! provides forward kinematics, three inverse-kinematics solvers, trajectory
//! generators, arc-fitting utilities and motion-capture ingestion, plus the
//! `efinger` command-line front-end.
//!
//! ```
//! use elliptic_finger::finger::{forward_kinematics, FingerParams, JointAngles};
//!
//! let params = FingerParams::reference();
//! let rest = forward_kinematics(&params, &JointAngles::rest());
//! assert!(rest.x.abs() < 1e-12 && rest.y.abs() < 1e-12 && rest.z > 0.0);
//! ```

pub mod capture;
pub mod finger;
pub mod fit;
pub mod ik;
pub mod joint;
pub mod traj;

mod numeric;

pub use finger::{FingerParams, JointAngles, JointLimits, PostureCloud};
pub use ik::{IkSolution, SolverSettings};
pub use joint::{AxisOrientation, EllipseAxes, HomTransform, JointAngle, JointPlane};
