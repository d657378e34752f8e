//! Arithmetic helpers and exact polynomials.
//!
//! Run with `cargo run --example number_theory`.

use cayley_census::numtheory::{divisors, euler_phi, moebius_int, units_mod, Factorization};
use cayley_census::{IntPoly, Result};
use num_bigint::BigInt;

fn main() -> Result<()> {
    for n in [12u64, 30, 64, 105] {
        let f = Factorization::of(n)?;
        println!(
            "n = {n}: factors {:?}, φ = {}, μ = {}, divisors {:?}, square-free {}",
            f.factors(),
            euler_phi(n)?,
            moebius_int(n)?,
            divisors(n)?,
            f.is_square_free()
        );
    }
    println!("units mod 12: {:?}", units_mod(12));

    // Σ_{d|n} φ(d) = n
    let n = 360;
    let total: u64 = divisors(n)?.into_iter().map(|d| euler_phi(d).unwrap()).sum();
    println!("Σ φ(d) over d | {n} = {total}");

    let p = IntPoly::one_plus_x_pow(2).pow(3);
    let q: IntPoly = "x^2+2x^3+x^4+x^5".parse()?;
    println!("(1+x^2)^3 = {p}");
    println!("({q}) * (1+x) = {}", &q * &IntPoly::one_plus_x_pow(1));
    println!(
        "value at 1: {}, at 2: {}",
        q.eval_at_one(),
        q.eval_int(&BigInt::from(2))
    );

    let big = IntPoly::one_plus_x_pow(1).pow(200);
    println!("middle coefficient of (1+x)^200: {}", big.coeff(100));
    println!(
        "(1+x)^4 / 2 exactly? {:?}",
        IntPoly::one_plus_x_pow(1)
            .pow(4)
            .divide_exact_by_int(&BigInt::from(2))
            .is_ok()
    );
    Ok(())
}
