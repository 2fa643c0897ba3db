//! Seeded random instances with small integer entries in `-2..=2`.

use rand::Rng;

use crate::adjunction::ModuleAction;
use crate::em::{combine, TwoCell};
use crate::error::{Error, Result};
use crate::exact::{LinearMap, Rational};

pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::from_int(rng.gen_range(-2..=2))
}

/// Random element of the span of `basis`.
pub fn random_two_cell<R: Rng + ?Sized>(basis: &[TwoCell], rng: &mut R) -> Result<TwoCell> {
    let coeffs: Vec<Rational> = basis.iter().map(|_| small_rational(rng)).collect();
    combine(basis, &coeffs)
}

pub fn random_matrix<R: Rng + ?Sized>(dom: &[usize], cod: &[usize], rng: &mut R) -> LinearMap {
    LinearMap::from_fn(dom, cod, |_, _| small_rational(rng))
}

/// Rejection-samples an invertible `n × n` matrix.
pub fn random_invertible<R: Rng + ?Sized>(n: usize, rng: &mut R) -> LinearMap {
    loop {
        let s = random_matrix(&[n], &[n], rng);
        if s.rank() == n {
            return s;
        }
    }
}

/// Direct sum of seeds drawn with replacement up to `max_dim`, conjugated by a
/// random invertible matrix.
pub fn random_module<R: Rng + ?Sized>(seeds: &[ModuleAction], max_dim: usize, rng: &mut R) -> Result<ModuleAction> {
    let usable: Vec<&ModuleAction> = seeds.iter().filter(|m| m.carrier_dim() <= max_dim && m.carrier_dim() > 0).collect();
    if usable.is_empty() {
        return Err(Error::DimensionMismatch(format!("no seed module of dimension at most {max_dim}")));
    }
    let mut module = usable[rng.gen_range(0..usable.len())].clone();
    loop {
        let room = max_dim - module.carrier_dim();
        let fitting: Vec<&&ModuleAction> = usable.iter().filter(|m| m.carrier_dim() <= room).collect();
        if fitting.is_empty() || rng.gen_bool(0.4) {
            break;
        }
        module = module.direct_sum(fitting[rng.gen_range(0..fitting.len())])?;
    }
    let s = random_invertible(module.carrier_dim(), rng);
    module.conjugate(&s)
}

/// The generator used for every seeded instance.
pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}
