//! The discrete gauge group of the solid torus.
//!
//! The group is a central extension 0 → Z → G → Z² → 0 generated by α, β
//! and a central γ with [α,β] = γ⁻². Every element has a unique normal form
//! α^a β^b γ^c, multiplication is
//!
//! ```text
//! (α^a1 β^b1 γ^c1)(α^a2 β^b2 γ^c2) = α^(a1+a2) β^(b1+b2) γ^(2·b1·a2 + c1 + c2)
//! ```
//!
//! and the degree of a normal form is c - a·b. Walking the Cayley graph of G
//! assigns a spectral flow weight to each generator edge; the weights are
//! k_α = 2, k_β = -2, k_γ = -2.

use num::bigint::BigInt;
use num::traits::Zero;

/// Spectral flow picked up along an α edge of the Cayley graph.
pub const SF_ALPHA: i64 = 2;
/// Spectral flow picked up along a β edge.
pub const SF_BETA: i64 = -2;
/// Spectral flow picked up along a γ edge.
pub const SF_GAMMA: i64 = -2;

/// Normal form α^a β^b γ^c. Exponents are arbitrary precision: the central
/// exponent grows like a·b under multiplication of long words.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GaugeWord {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl GaugeWord {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        GaugeWord {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn identity() -> Self {
        GaugeWord::new(0, 0, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// Group product in normal form.
    pub fn multiply(&self, other: &GaugeWord) -> GaugeWord {
        GaugeWord {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            c: 2 * &self.b * &other.a + &self.c + &other.c,
        }
    }

    /// Inverse in normal form: (-a, -b, -c + 2ab).
    pub fn inverse(&self) -> GaugeWord {
        GaugeWord {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c + 2 * &self.a * &self.b,
        }
    }

    /// Degree of the underlying gauge transformation: c - a·b.
    pub fn degree(&self) -> BigInt {
        &self.c - &self.a * &self.b
    }

    /// Commutator g h g⁻¹ h⁻¹.
    pub fn commutator(&self, other: &GaugeWord) -> GaugeWord {
        self.multiply(other)
            .multiply(&self.inverse())
            .multiply(&other.inverse())
    }
}

impl std::ops::Mul for &GaugeWord {
    type Output = GaugeWord;

    fn mul(self, rhs: &GaugeWord) -> GaugeWord {
        self.multiply(rhs)
    }
}

/// A single generator or inverse generator letter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorLetter {
    Alpha,
    AlphaInv,
    Beta,
    BetaInv,
    Gamma,
    GammaInv,
}

impl GeneratorLetter {
    pub fn word(self) -> GaugeWord {
        match self {
            GeneratorLetter::Alpha => GaugeWord::new(1, 0, 0),
            GeneratorLetter::AlphaInv => GaugeWord::new(1, 0, 0).inverse(),
            GeneratorLetter::Beta => GaugeWord::new(0, 1, 0),
            GeneratorLetter::BetaInv => GaugeWord::new(0, 1, 0).inverse(),
            GeneratorLetter::Gamma => GaugeWord::new(0, 0, 1),
            GeneratorLetter::GammaInv => GaugeWord::new(0, 0, 1).inverse(),
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            GeneratorLetter::Alpha => GeneratorLetter::AlphaInv,
            GeneratorLetter::AlphaInv => GeneratorLetter::Alpha,
            GeneratorLetter::Beta => GeneratorLetter::BetaInv,
            GeneratorLetter::BetaInv => GeneratorLetter::Beta,
            GeneratorLetter::Gamma => GeneratorLetter::GammaInv,
            GeneratorLetter::GammaInv => GeneratorLetter::Gamma,
        }
    }

    /// Spectral flow contributed by the corresponding Cayley graph edge.
    pub fn spectral_weight(self) -> i64 {
        match self {
            GeneratorLetter::Alpha => SF_ALPHA,
            GeneratorLetter::AlphaInv => -SF_ALPHA,
            GeneratorLetter::Beta => SF_BETA,
            GeneratorLetter::BetaInv => -SF_BETA,
            GeneratorLetter::Gamma => SF_GAMMA,
            GeneratorLetter::GammaInv => -SF_GAMMA,
        }
    }
}

/// Left fold of the multiplication law over a word in the generators.
pub fn word_to_normal_form(letters: &[GeneratorLetter]) -> GaugeWord {
    letters
        .iter()
        .fold(GaugeWord::identity(), |acc, l| acc.multiply(&l.word()))
}

/// Spectral flow of the path of connections tracing the word through the
/// Cayley graph: the sum of the per-edge weights.
pub fn solid_torus_spectral_flow(letters: &[GeneratorLetter]) -> i64 {
    letters.iter().map(|l| l.spectral_weight()).sum()
}

/// The word α^a β^b expanded into letters. Used to cross-check spectral flow
/// against the normal form: for such words the flow is 2(a - b).
pub fn alpha_beta_letters(a: i64, b: i64) -> Vec<GeneratorLetter> {
    let mut letters = Vec::new();
    let (la, na) = if a >= 0 {
        (GeneratorLetter::Alpha, a)
    } else {
        (GeneratorLetter::AlphaInv, -a)
    };
    letters.extend(std::iter::repeat_n(la, na as usize));
    let (lb, nb) = if b >= 0 {
        (GeneratorLetter::Beta, b)
    } else {
        (GeneratorLetter::BetaInv, -b)
    };
    letters.extend(std::iter::repeat_n(lb, nb as usize));
    letters
}
