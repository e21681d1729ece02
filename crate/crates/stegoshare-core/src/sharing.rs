//! Odd/even pixel sharing.
//!
//! A key image is linearized row-major and dealt into two shares:
//! share 1 takes 1-based odd positions (0-based indices 0, 2, 4, ...),
//! share 2 takes the even positions. Both shares together reconstruct
//! the original pixel sequence; either one alone is half the picture.

use crate::error::{Error, Result};
use crate::image::GrayImage;

/// The two pixel sequences produced by odd/even-position splitting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PixelShares {
    /// Pixels at 1-based odd positions, in order. Holds `ceil(n / 2)`
    /// values for an `n`-pixel image.
    pub share1: Vec<u8>,
    /// Pixels at 1-based even positions, in order. Holds `floor(n / 2)`
    /// values.
    pub share2: Vec<u8>,
    /// Pixel count of the original image, kept so odd-length sequences
    /// merge unambiguously.
    pub total_len: usize,
}

/// Splits a linearized image into its two position shares.
pub fn split_image(img: &GrayImage) -> PixelShares {
    let pixels = img.pixels();
    let share1 = pixels.iter().step_by(2).copied().collect();
    let share2 = pixels.iter().skip(1).step_by(2).copied().collect();
    PixelShares {
        share1,
        share2,
        total_len: pixels.len(),
    }
}

/// Merges two shares back into the original pixel sequence: output
/// position `2k` comes from `share1[k]`, position `2k + 1` from
/// `share2[k]`.
pub fn merge_shares(shares: &PixelShares) -> Result<Vec<u8>> {
    let n = shares.total_len;
    if shares.share1.len() != n.div_ceil(2) || shares.share2.len() != n / 2 {
        return Err(Error::MalformedShares {
            share1: shares.share1.len(),
            share2: shares.share2.len(),
        });
    }
    let mut out = Vec::with_capacity(n);
    for k in 0..shares.share1.len() {
        out.push(shares.share1[k]);
        if k < shares.share2.len() {
            out.push(shares.share2[k]);
        }
    }
    Ok(out)
}
