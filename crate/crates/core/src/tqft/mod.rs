//! Cobordism words evaluated with a Frobenius structure.
//!
//! Each slice is the Kronecker product of its generators, leftmost factor
//! major, and slices compose in textual order: `"d | m"` is `μ∘Δ`. For
//! example the slice `"i m"` on `A⊗A⊗A` sends `e_p⊗e_q⊗e_r` to
//! `Σ_k c[q][r][k] e_p⊗e_k`, the entry at row `p·n + k`, column
//! `(p·n + q)·n + r`.

mod word;

pub use word::{parse_word, DiagramWord, Generator, Slice};

use crate::error::{Error, Result};
use crate::exact::{LinearMap, Rational};
use crate::frobenius::FrobeniusStructure;

fn generator_map(fs: &FrobeniusStructure, g: Generator) -> LinearMap {
    let n = fs.dim();
    match g {
        Generator::Unit => fs.unit_map(),
        Generator::Counit => fs.counit_map(),
        Generator::Mult => fs.mult_map(),
        Generator::Comult => fs.comult().clone(),
        Generator::Identity => LinearMap::id(n),
        Generator::Swap => LinearMap::swap_map(n),
    }
}

pub fn evaluate_slice(fs: &FrobeniusStructure, slice: &Slice) -> LinearMap {
    LinearMap::kron_all(&slice.generators.iter().map(|&g| generator_map(fs, g)).collect::<Vec<_>>())
}

/// `A^⊗in → A^⊗out`.
pub fn evaluate_word(fs: &FrobeniusStructure, w: &DiagramWord) -> Result<LinearMap> {
    let mut acc = LinearMap::identity(&vec![fs.dim(); w.in_strands()]);
    for slice in w.slices() {
        acc = evaluate_slice(fs, slice).compose(&acc)?;
    }
    Ok(acc)
}

/// Parses and evaluates in one step.
pub fn evaluate(fs: &FrobeniusStructure, text: &str) -> Result<LinearMap> {
    evaluate_word(fs, &parse_word(text)?)
}

/// `μ∘Δ`, the word `"d | m"`.
pub fn handle_operator(fs: &FrobeniusStructure) -> LinearMap {
    evaluate(fs, "d | m").expect("valid word")
}

/// `"u | d | m | … | d | m | c"` with `genus` handles.
pub fn surface_word(genus: usize) -> String {
    let mut parts = vec!["u"];
    parts.extend(std::iter::repeat_n(["d", "m"], genus).flatten());
    parts.push("c");
    parts.join(" | ")
}

/// `ε(H^g(1))` for a commutative Frobenius algebra.
pub fn surface_invariant(fs: &FrobeniusStructure, genus: usize) -> Result<Rational> {
    if !fs.algebra().is_commutative() {
        return Err(Error::NotCommutative);
    }
    let h = handle_operator(fs);
    let mut v = fs.algebra().unit_vec().to_vec();
    for _ in 0..genus {
        v = h.apply(&v);
    }
    Ok(v.iter().zip(fs.counit_vec()).map(|(a, b)| a * b).sum())
}
