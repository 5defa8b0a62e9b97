//! Bessel functions `J, Y, I, K` of real order and positive real argument.
//!
//! Non-negative orders use Temme's series (`x < 2`) or Steed's complex
//! continued fraction (`x >= 2`) for the pair at reduced order `|mu| <= 1/2`,
//! combined with the CF1 ratio and recurrence in the order. This covers
//! integer orders without any limiting procedure. Negative orders follow
//! from the reflection formulas.

use std::f64::consts::PI;

use super::gamma::{cos_pi, rgamma, sin_pi, temme_gam1};
use crate::error::{Error, Result};

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-290;
const MAXIT: usize = 200_000;
const XMIN: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BesselKind {
    J,
    Y,
    I,
    K,
}

/// A Bessel function of a given kind and real order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bessel {
    pub kind: BesselKind,
    pub order: f64,
}

impl Bessel {
    pub fn new(kind: BesselKind, order: f64) -> Self {
        Self { kind, order }
    }

    pub fn j(order: f64) -> Self {
        Self::new(BesselKind::J, order)
    }

    pub fn y(order: f64) -> Self {
        Self::new(BesselKind::Y, order)
    }

    pub fn i(order: f64) -> Self {
        Self::new(BesselKind::I, order)
    }

    pub fn k(order: f64) -> Self {
        Self::new(BesselKind::K, order)
    }

    pub fn eval(&self, z: f64) -> Result<f64> {
        bessel(*self, z)
    }

    /// Value and derivative with respect to the argument.
    pub fn eval_with_derivative(&self, z: f64) -> Result<(f64, f64)> {
        bessel_with_derivative(*self, z)
    }
}

pub fn bessel(b: Bessel, z: f64) -> Result<f64> {
    bessel_with_derivative(b, z).map(|(v, _)| v)
}

pub fn bessel_derivative(b: Bessel, z: f64) -> Result<f64> {
    bessel_with_derivative(b, z).map(|(_, d)| d)
}

pub fn bessel_with_derivative(b: Bessel, z: f64) -> Result<(f64, f64)> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain {
            what: "bessel",
            detail: format!("argument must be positive and finite, got {z}"),
        });
    }
    if !b.order.is_finite() {
        return Err(Error::Domain {
            what: "bessel",
            detail: format!("order must be finite, got {}", b.order),
        });
    }
    let nu = b.order.abs();
    let negative = b.order < 0.0;
    let out = match b.kind {
        BesselKind::J | BesselKind::Y => {
            let p = jy(nu, z)?;
            let (j, y) = if negative {
                let (s, c) = (sin_pi(nu), cos_pi(nu));
                (
                    (c * p.j - s * p.y, c * p.jp - s * p.yp),
                    (s * p.j + c * p.y, s * p.jp + c * p.yp),
                )
            } else {
                ((p.j, p.jp), (p.y, p.yp))
            };
            if b.kind == BesselKind::J {
                j
            } else {
                y
            }
        }
        BesselKind::I | BesselKind::K => {
            let p = ik_scaled(nu, z)?;
            if b.kind == BesselKind::K {
                let e = (-z).exp();
                (p.k * e, p.kp * e)
            } else {
                let e = z.exp();
                let (mut i, mut ip) = (p.i, p.ip);
                if negative {
                    let c = 2.0 / PI * sin_pi(nu) * (-2.0 * z).exp();
                    i += c * p.k;
                    ip += c * p.kp;
                }
                (i * e, ip * e)
            }
        }
    };
    if out.0.is_finite() && out.1.is_finite() {
        Ok(out)
    } else {
        Err(Error::NumericRange("bessel"))
    }
}

/// `J, Y` and their derivatives at one order.
#[derive(Debug, Clone, Copy)]
struct JyPair {
    j: f64,
    y: f64,
    jp: f64,
    yp: f64,
}

/// Exponentially scaled `I, K`: `e^-x I`, `e^x K` and derivatives.
#[derive(Debug, Clone, Copy)]
struct IkScaled {
    i: f64,
    k: f64,
    ip: f64,
    kp: f64,
}

/// Temme-series coefficients shared by the `Y` and `K` small-argument sums.
struct TemmeCoefs {
    gam1: f64,
    gam2: f64,
    gampl: f64,
    gammi: f64,
}

impl TemmeCoefs {
    fn new(mu: f64) -> Self {
        let gampl = rgamma(1.0 + mu);
        let gammi = rgamma(1.0 - mu);
        Self {
            gam1: temme_gam1(mu),
            gam2: 0.5 * (gammi + gampl),
            gampl,
            gammi,
        }
    }
}

fn cf1_failure(what: &'static str) -> Error {
    Error::NumericRange(what)
}

fn jy(nu: f64, x: f64) -> Result<JyPair> {
    let nl = if x < XMIN {
        (nu + 0.5) as usize
    } else {
        (nu - x + 1.5).max(0.0) as usize
    };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: J'_nu / J_nu by modified Lentz, tracking the sign of J.
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(cf1_failure("Bessel J continued fraction"));
    }

    // Downward recurrence from nu to mu, unnormalized.
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, rymu, mut ry1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS {
            1.0
        } else {
            pimu / pimu.sin()
        };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let tc = TemmeCoefs::new(xmu);
        let mut ff = 2.0 / PI * fact * (tc.gam1 * e.cosh() + tc.gam2 * fact2 * d);
        let e = e.exp();
        let mut p = e / (tc.gampl * PI);
        let mut q = 1.0 / (e * PI * tc.gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if pimu2.abs() < EPS {
            1.0
        } else {
            pimu2.sin() / pimu2
        };
        let r = PI * pimu2 * fact3 * fact3;
        let mut c = 1.0;
        let d = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut converged = false;
        for i in 1..MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= d / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = c * (ff + r * q);
            sum += del;
            let del1 = c * p - fi * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(cf1_failure("Bessel Y series"));
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2: p + i q = (J' + i Y') / (J + i Y) by Steed's method.
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        let mut converged = false;
        for i in 2..MAXIT {
            a += 2.0 * (i as f64 - 1.0);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() < EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(cf1_failure("Bessel CF2"));
        }
        let gam = (p - f) / q;
        let mut j = (w / ((p - f) * gam + q)).sqrt();
        if rjl < 0.0 {
            j = -j;
        }
        rjmu = j;
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }

    let fact = rjmu / rjl;
    let j = rjl1 * fact;
    let jp = rjp1 * fact;
    let mut ymu = rymu;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - ymu;
        ymu = ry1;
        ry1 = rytemp;
    }
    Ok(JyPair {
        j,
        y: ymu,
        jp,
        yp: nu * xi * ymu - ry1,
    })
}

fn ik_scaled(nu: f64, x: f64) -> Result<IkScaled> {
    let nl = (nu + 0.5) as usize;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;

    // CF1: I'_nu / I_nu.
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(cf1_failure("Bessel I continued fraction"));
    }

    let mut ril = FPMIN;
    let mut ripl = h * ril;
    let ril1 = ril;
    let rip1 = ripl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    let f = ripl / ril;

    // K_mu and K_{mu+1}, scaled by e^x.
    let (rkmu, rk1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS {
            1.0
        } else {
            pimu / pimu.sin()
        };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let tc = TemmeCoefs::new(xmu);
        let mut ff = fact * (tc.gam1 * e.cosh() + tc.gam2 * fact2 * d);
        let mut sum = ff;
        let e = e.exp();
        let mut p = 0.5 * e / tc.gampl;
        let mut q = 0.5 / (e * tc.gammi);
        let mut c = 1.0;
        let d = x2 * x2;
        let mut sum1 = p;
        let mut converged = false;
        for i in 1..MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= d / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = c * ff;
            sum += del;
            let del1 = c * (p - fi * ff);
            sum1 += del1;
            if del.abs() < sum.abs() * EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(cf1_failure("Bessel K series"));
        }
        let ex = x.exp();
        rkmu = sum * ex;
        rk1 = sum1 * xi2 * ex;
    } else {
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut delh = d;
        let mut h = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - xmu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        let mut converged = false;
        for i in 2..MAXIT {
            let fi = i as f64;
            a -= 2.0 * (fi - 1.0);
            c = -a * c / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(cf1_failure("Bessel K CF2"));
        }
        h *= a1;
        rkmu = (PI / (2.0 * x)).sqrt() / s;
        rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
    }

    let rkmup = xmu * xi * rkmu - rk1;
    // Wronskian I K' - I' K = -1/x fixes the normalization of I.
    let rimu = xi / (f * rkmu - rkmup);
    let i = rimu * ril1 / ril;
    let ip = rimu * rip1 / ril;
    let mut kmu = rkmu;
    let mut k1 = rk1;
    for i in 1..=nl {
        let rktemp = (xmu + i as f64) * xi2 * k1 + kmu;
        kmu = k1;
        k1 = rktemp;
    }
    Ok(IkScaled {
        i,
        k: kmu,
        ip,
        kp: nu * xi * kmu - k1,
    })
}
