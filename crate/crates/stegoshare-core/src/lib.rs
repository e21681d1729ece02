//! Share-based LSB-XOR steganography for grayscale images.
//!
//! A grayscale key image is split into two pixel shares by odd/even
//! position. The secret — text bytes or another grayscale image — is
//! encoded LSB-first per byte, partitioned the same way, and XORed into
//! the LSBs of the matching share before the shares merge back into the
//! stego image. Every pixel therefore moves by at most one grey level.
//! Detection XORs the key and stego shares back together; both shares
//! of the key are required to recover anything.
//!
//! The crate provides the bit codec, the pixel sharing, embedding and
//! extraction, a self-describing payload frame (so the detector can
//! discover length and kind), PGM P2/P5 file support, and histogram
//! comparison between key and stego images.

pub mod analysis;
pub mod bitcodec;
mod error;
mod image;
pub mod payload;
pub mod pgm;
pub mod sharing;
pub mod stego;

pub use error::{Error, Result};
pub use image::GrayImage;
