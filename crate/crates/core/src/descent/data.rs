//! Bundled data for the p = 7, n = 28 instance: the integer element of
//! Z[ζ₂₈] whose inverse w is the required unit. Transcribed once; the
//! checksum guards the transcription, and the unit test w·E = 1 with both
//! factors integral cross-validates every digit.

use sha2::{Digest, Sha256};

use crate::exactfield::{parse_cyc, CycElem, FieldError, Tower};

const P7_N28_DENOMINATOR: &str = include_str!("data/p7_n28_denominator.txt");
const P7_N28_SHA256: &str = "a28437dc0f8d3dd8a690113929b330a1646648b61afe46b9b1a6ad67fb3108e9";

/// The raw literal of the bundled denominator element.
pub fn bundled_denominator_literal() -> Result<&'static str, FieldError> {
    let mut hasher = Sha256::new();
    hasher.update(P7_N28_DENOMINATOR.as_bytes());
    let digest: String = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    if digest != P7_N28_SHA256 {
        return Err(FieldError::Parse(format!(
            "bundled data checksum mismatch: {digest}"
        )));
    }
    Ok(P7_N28_DENOMINATOR.trim_end())
}

/// The bundled denominator element E ∈ Z[ζ₂₈], parsed on the given tower
/// (which must have conductor 28).
pub fn bundled_denominator(tower: &Tower) -> Result<CycElem, FieldError> {
    if tower.modulus() != 28 {
        return Err(FieldError::UnsupportedTower("bundled data is for conductor 28".into()));
    }
    parse_cyc(tower, bundled_denominator_literal()?)
}

/// The unit w = E⁻¹ of Z[ζ₂₈].
pub fn bundled_w(tower: &Tower) -> Result<CycElem, FieldError> {
    bundled_denominator(tower)?.inv()
}
