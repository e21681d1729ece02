//! Embedding and detection.
//!
//! Embedding routes the message through the share pipeline: the message
//! stream is split odd/even, the key image is split into its two pixel
//! shares, each share's pixel LSBs are XORed with the matching message
//! half, and the shares merge back into the stego image. Pixels past
//! the end of the message are copied unchanged.
//!
//! Detection is symmetric: both images are split into shares, the LSBs
//! of corresponding share pixels are XORed, and the two result streams
//! interleave back into the message.

use crate::bitcodec::{self, BitStream};
use crate::error::{Error, Result};
use crate::image::GrayImage;
use crate::sharing::{self, PixelShares};

/// Maximum number of embeddable bits: one per pixel LSB.
pub fn capacity_bits(img: &GrayImage) -> usize {
    img.pixel_count()
}

/// Replaces the LSB of `share[k]` with `lsb(share[k]) XOR bits[k]` for
/// every message bit; the rest of the share is copied unchanged.
fn xor_share_lsbs(share: &[u8], bits: &BitStream) -> Vec<u8> {
    let mut out = share.to_vec();
    for (pixel, &bit) in out.iter_mut().zip(bits.iter()) {
        let new_lsb = (*pixel & 1) ^ bit;
        *pixel = (*pixel & !1) | new_lsb;
    }
    out
}

/// XORs the LSBs of two equal-length pixel sequences into a bit stream.
fn xor_lsb_streams(a: &[u8], b: &[u8]) -> BitStream {
    debug_assert_eq!(a.len(), b.len());
    let mut out = BitStream::with_capacity(a.len());
    for (&x, &y) in a.iter().zip(b.iter()) {
        out.push((x ^ y) & 1);
    }
    out
}

/// Embeds a bit stream into a key image, producing the stego image.
///
/// The message must fit the key's capacity of one bit per pixel.
pub fn embed_bits(key: &GrayImage, msg: &BitStream) -> Result<GrayImage> {
    let available = capacity_bits(key);
    if msg.len() > available {
        return Err(Error::CapacityExceeded {
            required: msg.len(),
            available,
        });
    }

    let (msg_odd, msg_even) = bitcodec::split_odd_even(msg);
    let key_shares = sharing::split_image(key);

    let stego_shares = PixelShares {
        share1: xor_share_lsbs(&key_shares.share1, &msg_odd),
        share2: xor_share_lsbs(&key_shares.share2, &msg_even),
        total_len: key_shares.total_len,
    };

    let pixels = sharing::merge_shares(&stego_shares)?;
    GrayImage::new(key.width(), key.height(), pixels)
}

/// Recovers the first `nbits` embedded bits from a stego image given
/// the key image it was embedded into.
///
/// Both images must have identical dimensions; a detector without the
/// proper shares has nothing to XOR against.
pub fn extract_bits(key: &GrayImage, stego: &GrayImage, nbits: usize) -> Result<BitStream> {
    if !key.same_dimensions(stego) {
        return Err(Error::DimensionMismatch {
            width_a: key.width(),
            height_a: key.height(),
            width_b: stego.width(),
            height_b: stego.height(),
        });
    }
    let available = capacity_bits(key);
    if nbits > available {
        return Err(Error::CapacityExceeded {
            required: nbits,
            available,
        });
    }

    let key_shares = sharing::split_image(key);
    let stego_shares = sharing::split_image(stego);

    let m1 = xor_lsb_streams(&key_shares.share1, &stego_shares.share1);
    let m2 = xor_lsb_streams(&key_shares.share2, &stego_shares.share2);

    let mut msg = bitcodec::interleave(&m1, &m2)?;
    msg.truncate(nbits);
    Ok(msg)
}
