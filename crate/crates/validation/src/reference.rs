//! Published values for the Robinson–Trautman type II metric, transcribed
//! with `F`, `F3`, `F4` standing for the jet combinations of the catalog.

/// Nonzero components of `R`, `S`, `C` and `P`, up to symmetry.
pub const CURVATURE: &str = "
R: 1212 = -2*q/r^3
R: 1313 = 1414 = -2*(2*b*r^2-q)*(-a*r+2*b*r^2+q)/(f^2*r^2)
R: 1323 = 1424 = -(2*b*r^2-q)/(f^2*r)
R: 3434 = r*(-2*a*r+4*b*r^2+2*q+F*r)/f^4

S: 11 = -8*b*(-a*r+2*b*r^2+q)/r^2
S: 12 = -4*b/r
S: 33 = 44 = -(2*a-8*b*r-F)/f^2

C: 1212 = (2*a*r-6*q-F*r)/(3*r^3)
C: 1313 = 1414 = -(-a*r+2*b*r^2+q)*(2*a*r-6*q-F*r)/(3*f^2*r^2)
C: 1323 = 1424 = -(2*a*r-6*q-F*r)/(6*f^2*r)
C: 3434 = -r*(2*a*r-6*q-F*r)/(3*f^4)

P: -1212 = 1221 = 2*(3*q-2*b*r^2)/(3*r^3)
P: 1313 = 1414 = -2*(2*b*r^2-3*q)*(-a*r+2*b*r^2+q)/(3*f^2*r^2)
P: 1323 = 1424 = 2313 = 2414 = (3*q-2*b*r^2)/(3*f^2*r)
P: 1331 = 1441 = -2*(-a*r+2*b*r^2+q)*(-2*a*r+2*b*r^2+3*q+F*r)/(3*f^2*r^2)
P: 1332 = 1442 = 2331 = 2441 = -(-2*a*r+2*b*r^2+3*q+F*r)/(3*f^2*r)
P: 3434 = -3443 = 2*r*(-2*a*r+2*b*r^2+3*q+F*r)/(3*f^4)
";

/// Scalar curvature.
pub const KAPPA: &str = "-2*(-2*a+12*b*r+F)/r^2";

/// Nonzero components of `∇R` and `∇S`, derivative index last.
pub const DERIVATIVES: &str = "
dR: 12122 = 6*q/r^4
dR: 12133 = 12144 = 13132 = 14142 = 2*(2*b*r^2-3*q)*(-a*r+2*b*r^2+q)/(f^2*r^3)
dR: 12233 = 12244 = 13232 = 14242 = (2*b*r^2-3*q)/(f^2*r^2)
dR: 34343 = F3*r^2/f^4
dR: 23344 = -24343 = -1/2*34342 = (-2*a*r+2*b*r^2+3*q+F*r)/f^4
dR: 34344 = F4*r^2/f^4

dS: 112 = 8*b*(-a*r+2*b*r^2+q)/r^3
dS: 333 = 443 = F3/f^2
dS: 334 = 444 = F4/f^2
dS: 122 = 4*b/r^2
dS: 2*233 = 2*244 = 332 = 442 = -2*(-2*a+4*b*r+F)/(f^2*r)
";

/// Nonzero components of `R·R`, `Q(g,R)` and `Q(S,R)`.
pub const OPERATORS: &str = "
RR: -121323 = -121424 = 122313 = 122414 = (2*b*r^2-3*q)*(2*b*r^2-q)/(f^2*r^4)
RR: 133414 = -143413 = 2*(2*b*r^2-q)*(-a*r+2*b*r^2+q)*(-2*a*r+2*b*r^2+3*q+F*r)/(f^4*r^3)
RR: 133424 = -143423 = 233414 = -243413 = (2*b*r^2-q)*(-2*a*r+2*b*r^2+3*q+F*r)/(f^4*r^2)

QgR: 121323 = 121424 = -122313 = -122414 = (2*b*r^2-3*q)/(f^2*r)
QgR: -133414 = 143413 = 2*(-a*r+2*b*r^2+q)*(-2*a*r+2*b*r^2+3*q+F*r)/f^4
QgR: -133424 = 143423 = -233414 = 243413 = r*(-2*a*r+2*b*r^2+3*q+F*r)/f^4

QSR: -121323 = -121424 = 122313 = 122414 = (4*a*q+8*b^2*r^3-20*b*q*r-2*q*F)/(f^2*r^3)
QSR: -133414 = 143413 = 2*(-a*r+2*b*r^2+q)*(4*a*b*r^2+2*a*q-16*b*q*r-2*b*F*r^2-q*F)/(f^4*r^2)
QSR: 133424 = 143423 = 233414 = 243413 = -(-4*a*b*r^2-2*a*q+16*b*q*r+2*b*F*r^2+q*F)/(f^4*r)
";

/// Energy-momentum tensor, its covariant derivative, cyclic sums and
/// Codazzi differences.
pub const ENERGY: &str = "
T: 11 = c^4*(-a*r+2*b*r^2+q)*(-2*a+8*b*r+F+Lambda*r^2)/(4*pi*G*r^3)
T: 12 = c^4*(-2*a+8*b*r+F+Lambda*r^2)/(8*pi*G*r^2)
T: 33 = 44 = -c^4*r*(4*b+Lambda*r)/(8*pi*f^2*G)

dT: 112 = -c^4*(-a*r+2*b*r^2+q)*(-2*a+4*b*r+F)/(2*pi*G*r^4)
dT: 113 = c^4*F3*(-a*r+2*b*r^2+q)/(4*pi*G*r^3)
dT: 114 = c^4*F4*(-a*r+2*b*r^2+q)/(4*pi*G*r^3)
dT: 122 = -c^4*(-2*a+4*b*r+F)/(4*pi*G*r^3)
dT: 123 = c^4*F3/(8*pi*G*r^2)
dT: 124 = c^4*F4/(8*pi*G*r^2)
dT: 233 = 244 = -c^4*(-2*a+4*b*r+F)/(8*pi*f^2*G*r)
dT: 332 = 442 = b*c^4/(2*pi*f^2*G)

dT: 112 + 121 + 211 = -c^4*(-a*r+2*b*r^2+q)*(-2*a+4*b*r+F)/(2*pi*G*r^4)
dT: 113 + 131 + 311 = c^4*F3*(-a*r+2*b*r^2+q)/(4*pi*G*r^3)
dT: 114 + 141 + 411 = c^4*F4*(-a*r+2*b*r^2+q)/(4*pi*G*r^3)
dT: 122 + 221 + 212 = -c^4*(-2*a+4*b*r+F)/(2*pi*G*r^3)
dT: 123 + 231 + 312 = c^4*F3/(8*pi*G*r^2)
dT: 124 + 241 + 412 = c^4*F4/(8*pi*G*r^2)
dT: 233 + 332 + 323 = 244 + 442 + 424 = -c^4*(-2*a+2*b*r+F)/(4*pi*f^2*G*r)

dT: 121 - 112 = c^4*(-a*r+2*b*r^2+q)*(-2*a+4*b*r+F)/(2*pi*G*r^4)
dT: 113 - 131 = c^4*F3*(-a*r+2*b*r^2+q)/(4*pi*G*r^3)
dT: 114 - 141 = c^4*F4*(-a*r+2*b*r^2+q)/(4*pi*G*r^3)
dT: 123 - 132 = 213 - 231 = c^4*F3/(8*pi*G*r^2)
dT: 124 - 142 = 214 - 241 = c^4*F4/(8*pi*G*r^2)
dT: 221 - 212 = c^4*(-2*a+4*b*r+F)/(4*pi*G*r^3)
dT: 332 - 323 = 442 - 424 = c^4*(-2*a+8*b*r+F)/(8*pi*f^2*G*r)
";

/// Scalar of the pseudosymmetry relations `X·H = L Q(g,H)` for `X = R`.
pub const L_DESZCZ: &str = "(q-2*b*r^2)/r^3";

/// Scalar of `C·H = L Q(g,H)`.
pub const L_WEYL: &str = "-(2*a*r-6*q-F*r)/(6*r^3)";

/// `p [R·R − Q(S,R)] = m Q(g,C)` as `(p, m)`.
pub const MIXED_RR_QSR: (&str, &str) = (
    "r^3*(2*a*r-6*q-F*r)",
    "2*(4*a*q*r+4*b^2*r^4-12*b*q*r^2-3*q^2-2*q*F*r)",
);

/// `C·R − R·C = L1 Q(g,R) + L2 Q(S,R)`.
pub const MIXED_CR_RC_R: (&str, &str) = (
    "-(2*a*r-6*q-F*r)*(2*(a*q+4*b^2*r^3-6*b*q*r)-q*F)/(3*r^2*(4*q*r*(a-3*b*r)+4*b^2*r^4-3*q^2-2*q*F*r))",
    "(q-2*b*r^2)*(-2*a*r+6*q+F*r)/(8*q*r*(3*b*r-a)-8*b^2*r^4+6*q^2+4*q*F*r)",
);

/// `C·R − R·C = L1 Q(g,C) + L2 Q(S,C)`.
pub const MIXED_CR_RC_C: (&str, &str) = ("2*(-2*a+12*b*r+F)/(3*r^2)", "1");

/// 1-form of the recurrent conformal curvature 2-forms.
pub const CONFORMAL_TWO_FORM_PI: [&str; 4] = [
    "0",
    "(F-2*a)/(-2*a*r+6*q+F*r)",
    "F3*r/(-2*a*r+6*q+F*r)",
    "F4*r/(-2*a*r+6*q+F*r)",
];

/// Roter coefficients of `S∧S` and `g∧S`.
pub const ROTER_N1: &str = "r*(2*a*r-6*q-F*r)/(2*(-2*a+4*b*r+F)^2)";
pub const ROTER_N2: &str = "(4*a*b*r^2+6*a*q+8*b^2*r^3-F*(2*b*r^2+3*q)-36*b*q*r)/(r*(-2*a+4*b*r+F)^2)";

/// The printed `N3` contains a stray `\-` before the fraction. Reading it
/// as a minus sign and dropping it give these two candidates.
pub const ROTER_N3_MINUS: &str = "-(1/r^3)*(-4*b*r*(6*a*q+8*b^2*r^3-24*b*q*r-3*q*F)/(-2*a+4*b*r+F)^2+q)";
pub const ROTER_N3_DROPPED: &str = "-(1/r^3)*(4*b*r*(6*a*q+8*b^2*r^3-24*b*q*r-3*q*F)/(-2*a+4*b*r+F)^2+q)";

/// Both scalars `α` with `rank(S − αg) = 2`.
pub const TWO_QUASI_ALPHAS: [&str; 2] = ["(2*a-8*b*r-F)/r^2", "-4*b/r"];

/// `S = αg + βΠ⊗Π + γ(Π⊗Φ + Φ⊗Π)`, with norms `‖Π‖` and `‖Φ‖`.
pub struct Chaki {
    pub alpha: &'static str,
    pub beta: &'static str,
    pub gamma: &'static str,
    pub pi: [&'static str; 4],
    pub phi: [&'static str; 4],
    pub pi_norm: &'static str,
    pub phi_norm: &'static str,
}

pub const CHAKI: Chaki = Chaki {
    alpha: "-(-2*a+8*b*r+F)/r^2",
    beta: "4*b*(-2*a+4*b*r+F)/(Phi1^2*r)",
    gamma: "-2*a+4*b*r+F",
    pi: ["(q-a*r)/(Phi1*r^3)", "1/(Phi1*r^2)", "0", "0"],
    phi: ["Phi1", "0", "0", "0"],
    pi_norm: "-4*b/(Phi1^2*r^3)",
    phi_norm: "0",
};

/// `S = αg + βΠ⊗Π + γΦ⊗Φ` with unit-norm, orthogonal `Π` and `Φ`.
pub const DE_GHOSH: Chaki = Chaki {
    alpha: "-4*b/r",
    beta: "(-2*a+4*b*r+F)/r^2",
    gamma: "(-2*a+4*b*r+F)/r^2",
    pi: ["0", "0", "r/f", "0"],
    phi: ["0", "0", "0", "r/f"],
    pi_norm: "-1",
    phi_norm: "-1",
};

/// `S = αg + βΠ⊗Π + γE` with `E` trace free and `E(X, Π♯) = 0`.
pub const PSEUDO_QUASI: (&str, &str, &str, [&str; 4]) =
    ("-F/(2*r^2)", "-4*(a-6*b*r)/r^2", "1", ["0", "0", "0", "r/f"]);

/// Som–Raychaudhuri values.
pub const SR_RR_QSR: &str = "1";
pub const SR_CC_QGC: &str = "2*a^2/3";
pub const SR_EIN_LEVEL: i64 = 3;
pub const RT_EIN_LEVEL: i64 = 2;
