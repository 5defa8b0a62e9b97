//! Gamma function (Lanczos, g = 7, nine terms) and helpers for Temme's method.

use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Taylor coefficients of `1/Gamma(1 + x)` about `x = 0`.
const RGAMMA1P_TAYLOR: [f64; 25] = [
    1.0,
    5.772_156_649_015_329e-1,
    -6.558_780_715_202_539e-1,
    -4.200_263_503_409_524e-2,
    1.665_386_113_822_914_8e-1,
    -4.219_773_455_554_433e-2,
    -9.621_971_527_876_973e-3,
    7.218_943_246_663_1e-3,
    -1.165_167_591_859_065_2e-3,
    -2.152_416_741_149_509_8e-4,
    1.280_502_823_881_162e-4,
    -2.013_485_478_078_824e-5,
    -1.250_493_482_142_670_6e-6,
    1.133_027_231_981_696e-6,
    -2.056_338_416_977_607e-7,
    6.116_095_104_481_416e-9,
    5.002_007_644_469_223e-9,
    -1.181_274_570_487_02e-9,
    1.043_426_711_691_100_5e-10,
    7.782_263_439_905_071e-12,
    -3.696_805_618_642_206e-12,
    5.100_370_287_454_476e-13,
    -2.058_326_053_566_506_6e-14,
    -5.348_122_539_423_018e-15,
    1.226_778_628_238_260_8e-15,
];

/// Gamma function for real arguments; infinite at the poles.
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        let s = sin_pi(x);
        if s == 0.0 {
            return f64::INFINITY;
        }
        return PI / (s * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let t = x + LANCZOS_G + 0.5;
    let series = LANCZOS
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS[0], |acc, (i, c)| acc + c / (x + i as f64));
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * series
}

/// `1/Gamma(x)`, zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    1.0 / gamma(x)
}

/// `(1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)` for `|mu| <= 1/2`, free of
/// the cancellation at small `mu`.
pub(crate) fn temme_gam1(mu: f64) -> f64 {
    // Only odd Taylor terms survive; evaluate sum b_{2k+1} mu^{2k} by Horner.
    let mu2 = mu * mu;
    let mut acc = 0.0;
    let mut k = RGAMMA1P_TAYLOR.len() - 1;
    if k.is_multiple_of(2) {
        k -= 1;
    }
    loop {
        acc = acc * mu2 + RGAMMA1P_TAYLOR[k];
        if k == 1 {
            break;
        }
        k -= 2;
    }
    -acc
}

/// `sin(pi x)`, exactly zero at integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        0.0
    } else if r.abs() == 0.5 {
        r.signum()
    } else {
        (PI * r).sin()
    }
}

/// `cos(pi x)`, exactly zero at half-integers.
pub fn cos_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r.abs() == 0.5 {
        0.0
    } else if r == 0.0 {
        1.0
    } else if r.abs() == 1.0 {
        -1.0
    } else {
        (PI * r).cos()
    }
}
