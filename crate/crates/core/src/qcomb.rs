//! q-integers, q-factorials and the coefficient families of the two
//! expansions.
//!
//! `base` selects between `[n]_q` (`base = 1`) and `[n]_{q^2}` (`base = 2`);
//! any positive base works.
//!
//! ```text
//!   [n]_{q^p}  = 1 + q^p + q^{2p} + ... + q^{(n-1)p}
//!   θ_A(α,β,γ) = [α+2β+γ]_q! / ([α]_q! [γ]_q! [2]_q [4]_q ... [2β]_q)
//!   θ_B(α,β,γ) = [α+β+γ]_{q²}! φ_β / ([α]_{q²}! [β]_{q²}! [γ]_{q²}!)
//!   ξ          = -(1+q)² / (q - q⁻¹)
//! ```

use crate::poly::Polynomial;
use crate::ratfunc::RatFunc;
use crate::scalar::Coefficient;

/// `[n]_{q^base}`; zero for `n = 0`.
pub fn q_int<T: Coefficient>(n: usize, base: usize) -> Polynomial<T> {
    assert!(base >= 1, "q-integer base power must be positive");
    if n == 0 {
        return Polynomial::zero();
    }
    let mut coeffs = vec![T::zero(); (n - 1) * base + 1];
    for k in 0..n {
        coeffs[k * base] = T::one();
    }
    Polynomial::new(coeffs)
}

/// `[n]_{q^base}!`, with `[0]! = 1`.
pub fn q_factorial<T: Coefficient>(n: usize, base: usize) -> Polynomial<T> {
    (1..=n).fold(Polynomial::one(), |acc, k| &acc * &q_int(k, base))
}

/// `[2]_q [4]_q ... [2β]_q`; one for `β = 0`.
pub fn even_product<T: Coefficient>(beta: usize) -> Polynomial<T> {
    (1..=beta).fold(Polynomial::one(), |acc, k| &acc * &q_int(2 * k, 1))
}

/// `ξ = -(1+q)²/(q - q⁻¹)`, cleared to `-(1+q)² q / (q² - 1)` and reduced;
/// the canonical value is `(q+q²)/(1-q)`.
pub fn xi<T: Coefficient>() -> RatFunc<T> {
    let one_plus_q = Polynomial::<T>::from_i64s(&[1, 1]);
    let num = -(&(&one_plus_q * &one_plus_q) * &Polynomial::q());
    let den = Polynomial::from_i64s(&[-1, 0, 1]);
    RatFunc::new(num, den).expect("q^2 - 1 is nonzero")
}

/// Coefficient of `b^α c^β a^γ` in `(a+b)^n` under `ab = q ba + c`.
pub fn theta_a<T: Coefficient>(alpha: usize, beta: usize, gamma: usize) -> RatFunc<T> {
    let n = alpha + 2 * beta + gamma;
    let den = &(&q_factorial(alpha, 1) * &q_factorial(gamma, 1)) * &even_product(beta);
    RatFunc::new(q_factorial(n, 1), den).expect("q-factorials are nonzero")
}

/// `φ_β` from the three-term recursion `φ_β = φ_{β-1} + ξ [β-1]_{q²} φ_{β-2}`,
/// `φ₀ = φ₁ = 1`.
pub fn phi_recursive<T: Coefficient>(beta: usize) -> RatFunc<T> {
    phi_recursive_table(beta).pop().expect("table holds φ_0")
}

/// `[φ_0, ..., φ_β]` by the recursion.
pub fn phi_recursive_table<T: Coefficient>(beta: usize) -> Vec<RatFunc<T>> {
    let xi = xi::<T>();
    let mut table = vec![RatFunc::one()];
    for b in 1..=beta {
        let next = if b == 1 {
            RatFunc::one()
        } else {
            let step = &xi * &RatFunc::from_poly(q_int(b - 1, 2));
            &table[b - 1] + &(&step * &table[b - 2])
        };
        table.push(next);
    }
    table
}

/// `Ψ_{2i} = ([4]/[2]) [3] ([8]/[4]) [5] ... [2i-1] ([4i]/[2i])`, all base `q`.
pub fn psi<T: Coefficient>(i: usize) -> RatFunc<T> {
    assert!(i >= 1, "Ψ_2i needs i >= 1");
    let mut acc = RatFunc::one();
    for k in 1..=i {
        let ratio = RatFunc::new(q_int(4 * k, 1), q_int(2 * k, 1)).expect("nonzero");
        acc = &acc * &ratio;
        if k >= 2 {
            acc = &acc * &RatFunc::from_poly(q_int(2 * k - 1, 1));
        }
    }
    acc
}

/// `φ_β` in closed form: `φ_{2i} = (1-q)^{-i} Ψ_{2i}`,
/// `φ_{2i+1} = [2i+1]_q φ_{2i}`.
pub fn phi_closed<T: Coefficient>(beta: usize) -> RatFunc<T> {
    let i = beta / 2;
    let even = if i == 0 {
        RatFunc::one()
    } else {
        let one_minus_q = Polynomial::<T>::from_i64s(&[1, -1]);
        let scale = RatFunc::new(Polynomial::one(), one_minus_q.pow(i as u32)).expect("nonzero");
        &scale * &psi(i)
    };
    if beta % 2 == 1 {
        &RatFunc::from_poly(q_int(beta, 1)) * &even
    } else {
        even
    }
}

/// Coefficient of `c^α b^β a^γ` in `(a+b+c)^n` under
/// `ac = q² ca + ξ b²`, using the closed form for `φ_β`.
pub fn theta_b<T: Coefficient>(alpha: usize, beta: usize, gamma: usize) -> RatFunc<T> {
    &q2_multinomial(alpha, beta, gamma) * &phi_closed(beta)
}

/// `[α+β+γ]_{q²}! / ([α]_{q²}! [β]_{q²}! [γ]_{q²}!)` by the factorial
/// quotient. This is `θ_B` with `φ_β` replaced by one.
pub fn q2_multinomial<T: Coefficient>(alpha: usize, beta: usize, gamma: usize) -> RatFunc<T> {
    let n = alpha + beta + gamma;
    let den = &(&q_factorial(alpha, 2) * &q_factorial(beta, 2)) * &q_factorial(gamma, 2);
    RatFunc::new(q_factorial(n, 2), den).expect("q-factorials are nonzero")
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_complex::Complex64;

    use super::*;

    type P = Polynomial<BigInt>;
    type R = RatFunc<BigInt>;

    fn p(c: &[i64]) -> P {
        P::from_i64s(c)
    }

    fn r(n: &[i64], d: &[i64]) -> R {
        R::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int::<BigInt>(4, 1), p(&[1, 1, 1, 1]));
        assert_eq!(q_int::<BigInt>(0, 1), P::zero());
        assert_eq!(q_int::<BigInt>(3, 2), p(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial::<BigInt>(0, 1), P::one());
        assert_eq!(q_factorial::<BigInt>(2, 1), p(&[1, 1]));
        assert_eq!(q_factorial::<BigInt>(3, 1), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn even_product_examples() {
        assert_eq!(even_product::<BigInt>(0), P::one());
        assert_eq!(even_product::<BigInt>(1), p(&[1, 1]));
        assert_eq!(even_product::<BigInt>(2), &p(&[1, 1]) * &p(&[1, 1, 1, 1]));
    }

    #[test]
    fn xi_value() {
        assert_eq!(xi::<BigInt>(), r(&[0, 1, 1], &[1, -1]));
        let at2 = xi::<BigInt>().eval(Complex64::new(2.0, 0.0)).unwrap();
        assert!((at2 - Complex64::new(-6.0, 0.0)).norm() < 1e-12);
        let at_i = xi::<BigInt>().eval(Complex64::new(0.0, 1.0)).unwrap();
        assert!((at_i - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn theta_a_examples() {
        assert!(theta_a::<BigInt>(1, 0, 0).is_one());
        assert!(theta_a::<BigInt>(0, 0, 1).is_one());
        assert_eq!(theta_a::<BigInt>(1, 0, 1), R::from_poly(p(&[1, 1])));
        assert!(theta_a::<BigInt>(0, 1, 0).is_one());
    }

    #[test]
    fn phi_examples() {
        assert!(phi_recursive::<BigInt>(0).is_one());
        assert!(phi_recursive::<BigInt>(1).is_one());
        let phi2 = r(&[1, 0, 1], &[1, -1]);
        assert_eq!(phi_recursive::<BigInt>(2), phi2);
        assert_eq!(phi_closed::<BigInt>(2), phi2);
        let phi3 = &R::from_poly(p(&[1, 1, 1])) * &phi2;
        assert_eq!(phi_recursive::<BigInt>(3), phi3);
        assert_eq!(phi_closed::<BigInt>(3), phi3);
        assert!(phi_closed::<BigInt>(1).is_one());
    }

    #[test]
    fn phi_four_by_both_routes() {
        let expected = R::new(
            &(&p(&[1, 0, 1]) * &p(&[1, 1, 1])) * &p(&[1, 0, 0, 0, 1]),
            p(&[1, -1]).pow(2),
        )
        .unwrap();
        assert_eq!(phi_closed::<BigInt>(4), expected);
        assert_eq!(phi_recursive::<BigInt>(4), expected);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi::<BigInt>(1), R::from_poly(p(&[1, 0, 1])));
        let psi2 = &(&p(&[1, 0, 1]) * &p(&[1, 1, 1])) * &p(&[1, 0, 0, 0, 1]);
        assert_eq!(psi::<BigInt>(2), R::from_poly(psi2));
        let v = psi::<BigInt>(1).eval(Complex64::new(2.0, 0.0)).unwrap();
        assert!((v.re - 5.0).abs() < 1e-12);
    }

    #[test]
    fn theta_b_examples() {
        assert!(theta_b::<BigInt>(0, 1, 0).is_one());
        assert!(theta_b::<BigInt>(1, 0, 0).is_one());
        assert!(theta_b::<BigInt>(0, 0, 1).is_one());
        assert_eq!(theta_b::<BigInt>(0, 2, 0), r(&[1, 0, 1], &[1, -1]));
        assert_eq!(theta_b::<BigInt>(1, 0, 1), R::from_poly(p(&[1, 0, 1])));
    }

    #[test]
    fn identity_4i_plus_2() {
        for i in 1..=20 {
            let lhs = &p(&[1, 1]) * &q_int::<BigInt>(2 * i + 1, 2);
            assert_eq!(lhs, q_int(4 * i + 2, 1), "i = {i}");
        }
    }

    #[test]
    fn generic_over_machine_integers() {
        assert_eq!(phi_closed::<i128>(6), phi_recursive::<i128>(6));
        assert_eq!(theta_a::<i64>(2, 1, 2).den(), &Polynomial::one());
    }
}
