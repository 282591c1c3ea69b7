//! Constructors for the concrete number fields and function fields used
//! throughout: `Q(i)`, `Q(ζ₈)`, `Q(7^{1/4})`, `Q(i, 7^{1/4})` and the
//! transcendental extensions `K(t)`.

use std::sync::Arc;

use k3_algebra::{AlgExt, ExtContext, Field, Poly, Rational, RationalFunction};

use crate::error::Result;

pub type NumberField = AlgExt<Rational>;
pub type Tower = AlgExt<NumberField>;

/// `Q(i)` with `i² = -1`.
pub fn gaussian() -> Arc<ExtContext<Rational>> {
    ExtContext::new(Poly::from_ints(&[1, 0, 1]), "i").expect("degree 2")
}

/// `Q(ζ)` with `ζ⁴ = -1`, a primitive eighth root of unity. Contains `i = ζ²`
/// and `√2 = ζ - ζ³`.
pub fn cyclotomic8() -> Arc<ExtContext<Rational>> {
    ExtContext::new(Poly::from_ints(&[1, 0, 0, 0, 1]), "z").expect("degree 4")
}

/// `Q(θ)` with `θ⁴ = n`.
pub fn fourth_root_of(n: i64, name: &str) -> Result<Arc<ExtContext<Rational>>> {
    Ok(ExtContext::new(Poly::from_ints(&[-n, 0, 0, 0, 1]), name)?)
}

/// `Q(i)(θ)` with `θ⁴ = n`, a two-level tower.
pub fn gaussian_fourth_root(n: i64) -> (Arc<ExtContext<Rational>>, Arc<ExtContext<NumberField>>) {
    let gi = gaussian();
    let modulus = Poly::from_coeffs(vec![
        NumberField::from_int(-n),
        NumberField::from_int(0),
        NumberField::from_int(0),
        NumberField::from_int(0),
        NumberField::from_int(1),
    ]);
    let top = ExtContext::new(modulus, "t").expect("degree 4");
    (gi, top)
}

/// The transcendental `t` of `K(t)`.
pub fn transcendental<K: Field>() -> RationalFunction<K> {
    RationalFunction::var()
}

/// Embeds a base element into `K(t)`.
pub fn lift<K: Field>(c: K) -> RationalFunction<K> {
    RationalFunction::constant(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn eighth_root_identities() {
        let ctx = cyclotomic8();
        let z = NumberField::generator(&ctx);
        let i = z.clone() * z.clone();
        assert_eq!(i.clone() * i, -NumberField::one());
        let s2 = z.clone() - z.pow(3);
        assert_eq!(s2.clone() * s2, NumberField::from_int(2));
    }

    #[test]
    fn tower_relations() {
        let (gi, top) = gaussian_fourth_root(7);
        let i = Tower::from_base(NumberField::generator(&gi));
        let t = Tower::generator(&top);
        assert_eq!(i.pow(2), -Tower::one());
        assert_eq!(t.pow(4), Tower::from_int(7));
        assert_eq!((i * t).pow(4), Tower::from_int(7));
    }
}
