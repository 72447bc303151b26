//! Discrete-time motion model of a differential-drive robot, plus an exact
//! continuous-time integrator used only to validate it.
//!
//! Conventions used throughout:
//! - the heading `delta` is measured counter-clockwise from the +y axis,
//!   so the forward unit vector is `(-sin delta, cos delta)`;
//! - positive heading change is counter-clockwise (right wheel faster
//!   turns the robot left, toward the slower wheel);
//! - the pose point is the robot's center of mass, which sits half the
//!   body length behind the wheel axle; each wheel contact is therefore
//!   at body coordinates `(+/- a/2, b/2)`.
//!
//! One step splits the motion into a straight component at the common
//! wheel speed and a rotation about one wheel driven by the speed
//! difference. Opposite-signed wheel speeds instead combine an in-place
//! turn with a residual single-wheel rotation.

use crate::error::{Error, Result};

/// Physical robot constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobotGeometry {
    /// Wheel-track width `a` (m): lateral distance between wheel contacts.
    pub track_width: f64,
    /// Body length `b` (m).
    pub length: f64,
    /// Wheel radius `r` (m).
    pub wheel_radius: f64,
    /// Maximum wheel angular speed `w_max` (rad/s).
    pub max_wheel_speed: f64,
}

impl RobotGeometry {
    pub fn new(track_width: f64, length: f64, wheel_radius: f64, max_wheel_speed: f64) -> Result<Self> {
        for (name, v) in [
            ("track_width", track_width),
            ("length", length),
            ("wheel_radius", wheel_radius),
            ("max_wheel_speed", max_wheel_speed),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(RobotGeometry { track_width, length, wheel_radius, max_wheel_speed })
    }

    /// Desk-scale defaults: 20 cm track width, 25 cm length, 2.5 cm wheel
    /// radius, 600 RPM motors.
    pub fn desk_default() -> Self {
        RobotGeometry {
            track_width: 0.20,
            length: 0.25,
            wheel_radius: 0.025,
            max_wheel_speed: rpm_to_rad_per_sec(600.0),
        }
    }

    /// Distance `c` from a wheel contact to the center of mass.
    /// Recomputed on demand so it can never go stale.
    pub fn wheel_to_center(&self) -> f64 {
        let half_a = 0.5 * self.track_width;
        let half_b = 0.5 * self.length;
        (half_a * half_a + half_b * half_b).sqrt()
    }

    /// Angle `gamma` between the axle line and the wheel-to-center diagonal.
    pub fn diagonal_angle(&self) -> f64 {
        (self.length / self.track_width).atan()
    }
}

/// Motor speeds are configured in RPM; everything internal is rad/s.
pub fn rpm_to_rad_per_sec(rpm: f64) -> f64 {
    rpm * std::f64::consts::TAU / 60.0
}

/// Planar pose of the center of mass. `delta` stays normalized to
/// `(-pi, pi]` after every step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub delta: f64,
}

impl Pose {
    pub fn new(x: f64, y: f64, delta: f64) -> Self {
        Pose { x, y, delta: normalize_angle(delta) }
    }

    /// Forward unit vector `(-sin delta, cos delta)`.
    pub fn heading(&self) -> (f64, f64) {
        (-self.delta.sin(), self.delta.cos())
    }
}

/// Normalize an angle to `(-pi, pi]`. Angles already in range are
/// returned unchanged so repeated normalization is bit-stable.
pub fn normalize_angle(angle: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    if angle > -PI && angle <= PI {
        return angle;
    }
    let wrapped = angle.rem_euclid(TAU); // [0, 2*pi)
    if wrapped > PI {
        wrapped - TAU
    } else {
        wrapped
    }
}

/// Signed wheel angular speeds, clamped to the magnitude limit at
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WheelSpeeds {
    left: f64,
    right: f64,
}

impl WheelSpeeds {
    /// Clamps both speeds into `[-limit, limit]`.
    pub fn new(left: f64, right: f64, limit: f64) -> Self {
        WheelSpeeds { left: left.clamp(-limit, limit), right: right.clamp(-limit, limit) }
    }

    /// Wheel speeds from fractions of the maximum speed.
    pub fn from_fractions(left_fraction: f64, right_fraction: f64, geom: &RobotGeometry) -> Self {
        let w = geom.max_wheel_speed;
        WheelSpeeds::new(left_fraction * w, right_fraction * w, w)
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    /// True when the pair belongs to the opposite-rotation scenario.
    pub fn is_opposite(&self) -> bool {
        self.left * self.right < 0.0
    }
}

/// Sampling configuration of the discrete-time model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepConfig {
    /// Sampling period `T_s` (s).
    pub sample_period: f64,
}

impl StepConfig {
    pub fn new(sample_period: f64) -> Result<Self> {
        if !(sample_period > 0.0) || !sample_period.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "sample_period must be positive, got {sample_period}"
            )));
        }
        Ok(StepConfig { sample_period })
    }
}

/// Straight part of a same-direction step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForwardComponent {
    /// Common wheel speed: `sign(w_l) * min(|w_l|, |w_r|)` (rad/s).
    pub common_speed: f64,
    /// Linear forward speed `V_f = common_speed * r` (m/s).
    pub linear_speed: f64,
    /// World-frame displacement over one sample.
    pub dx: f64,
    pub dy: f64,
}

/// Rotation of the robot about one wheel, driven by the wheel-speed
/// difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationComponent {
    /// Residual speed `max(|w_l|, |w_r|) - min(|w_l|, |w_r|)` (rad/s),
    /// always non-negative here.
    pub residual_speed: f64,
    /// Signed rotation angle over one sample (counter-clockwise positive).
    pub alpha: f64,
    /// `sigma = gamma + |alpha|`.
    pub sigma: f64,
    /// Distance from the old axle midpoint to the rotated center of mass,
    /// by the law of cosines over the pivot triangle.
    pub pivot_chord: f64,
    /// Displacement of the center of mass in the body frame.
    pub dx_body: f64,
    pub dy_body: f64,
    /// The same displacement transferred to the world frame.
    pub dx_world: f64,
    pub dy_world: f64,
}

/// In-place turn produced by opposite wheel speeds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurnComponent {
    /// Turn speed `-sign(w_r) * min(w_r, w_l)` on signed values (rad/s).
    pub turn_speed: f64,
    /// Heading change `(2r/a) * turn_speed * T_s` (rad).
    pub alpha: f64,
}

/// Straight component, Eqs. of the same-direction scenario.
///
/// Rejects strictly opposite-signed speeds; the caller dispatches those
/// to [`opposite_step`].
pub fn forward_component(
    speeds: WheelSpeeds,
    pose: &Pose,
    geom: &RobotGeometry,
    cfg: &StepConfig,
) -> Result<ForwardComponent> {
    if speeds.is_opposite() {
        return Err(Error::WrongMotionScenario { left: speeds.left, right: speeds.right });
    }
    let common = sign(speeds.left) * speeds.left.abs().min(speeds.right.abs());
    let linear = common * geom.wheel_radius;
    let step = linear * cfg.sample_period;
    Ok(ForwardComponent {
        common_speed: common,
        linear_speed: linear,
        dx: -pose.delta.sin() * step,
        dy: pose.delta.cos() * step,
    })
}

/// Rotation about the slower wheel for one sample.
///
/// The magnitude comes from the law-of-cosines chord; the turn side is the
/// sign of `w_r - w_l` (toward the wheel with the smaller signed speed) and
/// a reversing pair mirrors the forward drift backward. With equal speeds
/// the component is exactly zero.
pub fn rotation_about_wheel(
    speeds: WheelSpeeds,
    pose: &Pose,
    geom: &RobotGeometry,
    cfg: &StepConfig,
) -> RotationComponent {
    let gamma = geom.diagonal_angle();
    let residual = speeds.left.abs().max(speeds.right.abs())
        - speeds.left.abs().min(speeds.right.abs());
    if residual == 0.0 {
        let (dx_world, dy_world) = origin_transfer(0.0, 0.0, pose.delta);
        return RotationComponent {
            residual_speed: 0.0,
            alpha: 0.0,
            sigma: gamma,
            pivot_chord: 0.5 * geom.length,
            dx_body: 0.0,
            dy_body: 0.0,
            dx_world,
            dy_world,
        };
    }

    let a = geom.track_width;
    let c = geom.wheel_to_center();
    let alpha_mag = residual * (geom.wheel_radius / a) * cfg.sample_period;
    let sigma = gamma + alpha_mag;
    let half_a = 0.5 * a;
    let chord = (half_a * half_a + c * c - a * c * sigma.cos()).sqrt();

    // Turn toward the wheel with the smaller signed speed; a backward
    // pair flips the forward drift.
    let turn = sign(speeds.right - speeds.left);
    let drive = if speeds.left + speeds.right < 0.0 { -1.0 } else { 1.0 };

    let dx_body = turn * chord * alpha_mag.sin();
    let dy_body = drive * (chord * alpha_mag.cos() - 0.5 * geom.length);
    let (dx_world, dy_world) = origin_transfer(dx_body, dy_body, pose.delta);
    RotationComponent {
        residual_speed: residual,
        alpha: turn * alpha_mag,
        sigma,
        pivot_chord: chord,
        dx_body,
        dy_body,
        dx_world,
        dy_world,
    }
}

/// Rotate a robot-frame displacement by the heading into the world frame.
pub fn origin_transfer(dx: f64, dy: f64, delta: f64) -> (f64, f64) {
    let (sin_d, cos_d) = delta.sin_cos();
    (dx * cos_d - dy * sin_d, dx * sin_d + dy * cos_d)
}

/// One sample of the same-direction scenario (both wheels forward, both
/// backward, or one stopped).
pub fn same_direction_step(
    pose: &Pose,
    speeds: WheelSpeeds,
    geom: &RobotGeometry,
    cfg: &StepConfig,
) -> Result<Pose> {
    let forward = forward_component(speeds, pose, geom, cfg)?;
    let rotation = rotation_about_wheel(speeds, pose, geom, cfg);
    Ok(Pose {
        x: pose.x + forward.dx + rotation.dx_world,
        y: pose.y + forward.dy + rotation.dy_world,
        delta: normalize_angle(pose.delta + rotation.alpha),
    })
}

/// One sample of the opposite scenario (wheels turning against each other).
///
/// The balanced part of the speeds turns the robot in place; the leftover
/// `w_r + w_l` acts as a single-wheel rotation about the wheel on the
/// reversing side, reusing the same-direction rotation component.
pub fn opposite_step(
    pose: &Pose,
    speeds: WheelSpeeds,
    geom: &RobotGeometry,
    cfg: &StepConfig,
) -> Result<Pose> {
    if !speeds.is_opposite() {
        return Err(Error::WrongMotionScenario { left: speeds.left, right: speeds.right });
    }
    let residual = speeds.right + speeds.left;
    // The wheel anchoring the residual rotation is the reversing one: the
    // leftover speed lives on the forward side.
    let residual_pair = if speeds.right > 0.0 {
        WheelSpeeds { left: 0.0, right: residual }
    } else {
        WheelSpeeds { left: residual, right: 0.0 }
    };
    let rotation = rotation_about_wheel(residual_pair, pose, geom, cfg);
    let turn = turn_component(speeds, geom, cfg);
    Ok(Pose {
        x: pose.x + rotation.dx_world,
        y: pose.y + rotation.dy_world,
        delta: normalize_angle(pose.delta + rotation.alpha + turn.alpha),
    })
}

/// In-place turn part of the opposite scenario.
pub fn turn_component(speeds: WheelSpeeds, geom: &RobotGeometry, cfg: &StepConfig) -> TurnComponent {
    let turn_speed = -sign(speeds.right) * speeds.right.min(speeds.left);
    let alpha =
        (2.0 * geom.wheel_radius / geom.track_width) * turn_speed * cfg.sample_period;
    TurnComponent { turn_speed, alpha }
}

/// One sample of the full model: dispatches on the sign product of the
/// wheel speeds, so it is total over all speed pairs.
pub fn step(pose: &Pose, speeds: WheelSpeeds, geom: &RobotGeometry, cfg: &StepConfig) -> Pose {
    if speeds.is_opposite() {
        opposite_step(pose, speeds, geom, cfg).expect("opposite pair checked")
    } else {
        same_direction_step(pose, speeds, geom, cfg).expect("same-direction pair checked")
    }
}

/// Exact continuous-time reference step, used only for validation.
///
/// The axle midpoint follows the closed-form arc about the instantaneous
/// center of curvature with `v = r(w_l + w_r)/2` and
/// `omega = r(w_r - w_l)/a`, and the center of mass is carried rigidly
/// half a body length behind it. For opposite-signed speeds the balanced
/// part spins the robot about the center of mass while the residual
/// rotates it about the reversing wheel, integrated in closed form; a pure
/// turn (`w_r = -w_l`) therefore leaves the position exactly unchanged.
pub fn exact_unicycle_step(
    pose: &Pose,
    speeds: WheelSpeeds,
    geom: &RobotGeometry,
    cfg: &StepConfig,
) -> Pose {
    let r = geom.wheel_radius;
    let a = geom.track_width;
    let half_b = 0.5 * geom.length;
    let t = cfg.sample_period;
    let omega = r * (speeds.right - speeds.left) / a;
    let delta_new = pose.delta + omega * t;

    if speeds.is_opposite() {
        // Residual rotation about the reversing wheel, whose body-frame
        // position is (-s * a/2, b/2) with s = +1 when the right wheel
        // drives forward. The pivot itself swings as the robot spins, so
        // integrate the center-of-mass velocity in closed form.
        let s = if speeds.right > 0.0 { 1.0 } else { -1.0 };
        let omega_res = s * r * (speeds.right + speeds.left) / a;
        let (pivot_bx, pivot_by) = (-s * 0.5 * a, half_b);
        let k = omega_res / omega;
        let (dx0, dy0) = origin_transfer(pivot_bx, pivot_by, pose.delta);
        let (dx1, dy1) = origin_transfer(pivot_bx, pivot_by, delta_new);
        return Pose {
            x: pose.x - k * (dx1 - dx0),
            y: pose.y - k * (dy1 - dy0),
            delta: normalize_angle(delta_new),
        };
    }

    let v = r * (speeds.left + speeds.right) / 2.0;
    let (hx0, hy0) = (-pose.delta.sin(), pose.delta.cos());
    let (hx1, hy1) = (-delta_new.sin(), delta_new.cos());
    let (nx0, ny0) = (-pose.delta.cos(), -pose.delta.sin()); // left normal
    // Axle midpoint, half a body length ahead of the center of mass.
    let ax = pose.x + half_b * hx0;
    let ay = pose.y + half_b * hy0;
    // Arc about the instantaneous center of curvature, written in chord
    // form `A + (v/w) sin(D) h + (v/w)(1 - cos(D)) n` which stays stable
    // as the curvature vanishes.
    let turned = omega * t;
    let (along, across) = if turned.abs() < 1e-6 {
        (v * t * (1.0 - turned * turned / 6.0), v * t * (turned / 2.0))
    } else {
        ((v / omega) * turned.sin(), (v / omega) * (1.0 - turned.cos()))
    };
    let ax1 = ax + along * hx0 + across * nx0;
    let ay1 = ay + along * hy0 + across * ny0;
    Pose {
        x: ax1 - half_b * hx1,
        y: ay1 - half_b * hy1,
        delta: normalize_angle(delta_new),
    }
}

fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}
