//! Self-describing payload framing.
//!
//! The raw scheme gives the detector no way to know where a message
//! ends or whether it was text or an image, so framed payloads carry a
//! 7-byte header: 2 magic bytes, 1 kind byte, and a 4-byte big-endian
//! body length. Image bodies additionally start with width and height
//! as 2-byte big-endian values. The layout is a wire format and must be
//! byte-identical across implementations.

use crate::bitcodec;
use crate::error::{Error, Result};
use crate::image::GrayImage;
use crate::stego;

/// Frame magic, the first two bytes of every framed payload.
pub const MAGIC: [u8; 2] = [0x53, 0x4D];

/// Header size in bytes: magic (2) + kind (1) + body length (4).
pub const HEADER_LEN: usize = 7;

const KIND_TEXT: u8 = 1;
const KIND_IMAGE: u8 = 2;

/// A decoded payload frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PayloadFrame {
    /// Arbitrary bytes, typically text.
    Text(Vec<u8>),
    /// A grayscale image payload.
    Image(GrayImage),
}

fn header(kind: u8, body_len: u32) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + body_len as usize);
    out.extend_from_slice(&MAGIC);
    out.push(kind);
    out.extend_from_slice(&body_len.to_be_bytes());
    out
}

/// Wraps text bytes in a frame: magic, kind 1, length, body.
pub fn frame_text(text: &[u8]) -> Vec<u8> {
    let len = u32::try_from(text.len()).expect("text payload exceeds u32 length");
    let mut out = header(KIND_TEXT, len);
    out.extend_from_slice(text);
    out
}

/// Wraps an image in a frame: magic, kind 2, length, then width and
/// height as 2-byte big-endian values followed by the row-major pixels.
pub fn frame_image(img: &GrayImage) -> Result<Vec<u8>> {
    let (w, h) = img.dimensions();
    if w > u16::MAX as u32 || h > u16::MAX as u32 {
        return Err(Error::UnsupportedDimensions {
            width: w,
            height: h,
        });
    }
    let body_len = 4 + img.pixel_count() as u32;
    let mut out = header(KIND_IMAGE, body_len);
    out.extend_from_slice(&(w as u16).to_be_bytes());
    out.extend_from_slice(&(h as u16).to_be_bytes());
    out.extend_from_slice(img.pixels());
    Ok(out)
}

/// Parses and validates a frame produced by [`frame_text`] or
/// [`frame_image`].
///
/// A magic mismatch reports an authentication failure: extracting with
/// the wrong key or from an unrelated image yields garbage here rather
/// than a silent wrong payload.
pub fn parse_frame(bytes: &[u8]) -> Result<PayloadFrame> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::TruncatedFrame {
            expected: HEADER_LEN,
            actual: bytes.len(),
        });
    }
    if bytes[..2] != MAGIC {
        return Err(Error::AuthenticationFailure);
    }
    let kind = bytes[2];
    let length = u32::from_be_bytes([bytes[3], bytes[4], bytes[5], bytes[6]]) as usize;
    let expected = HEADER_LEN + length;
    if bytes.len() != expected {
        return Err(Error::TruncatedFrame {
            expected,
            actual: bytes.len(),
        });
    }
    let body = &bytes[HEADER_LEN..];
    match kind {
        KIND_TEXT => Ok(PayloadFrame::Text(body.to_vec())),
        KIND_IMAGE => {
            if body.len() < 4 {
                return Err(Error::TruncatedFrame {
                    expected: HEADER_LEN + 4,
                    actual: bytes.len(),
                });
            }
            let w = u16::from_be_bytes([body[0], body[1]]) as u32;
            let h = u16::from_be_bytes([body[2], body[3]]) as u32;
            let pixels = &body[4..];
            if pixels.len() != w as usize * h as usize {
                return Err(Error::TruncatedFrame {
                    expected: HEADER_LEN + 4 + w as usize * h as usize,
                    actual: bytes.len(),
                });
            }
            Ok(PayloadFrame::Image(GrayImage::new(w, h, pixels.to_vec())?))
        }
        other => Err(Error::UnknownKind(other)),
    }
}

/// Extracts just the frame header from a stego/key pair, validates it,
/// and returns the total frame size in bits so the caller can extract
/// the whole frame.
pub fn header_peek_length(key: &GrayImage, stego: &GrayImage) -> Result<usize> {
    let header_bits = HEADER_LEN * 8;
    let bits = stego::extract_bits(key, stego, header_bits)?;
    let bytes = bitcodec::reversed_bits_to_bytes(&bits)?;
    if bytes[..2] != MAGIC {
        return Err(Error::AuthenticationFailure);
    }
    let kind = bytes[2];
    if kind != KIND_TEXT && kind != KIND_IMAGE {
        return Err(Error::UnknownKind(kind));
    }
    let length = u32::from_be_bytes([bytes[3], bytes[4], bytes[5], bytes[6]]) as usize;
    Ok((HEADER_LEN + length) * 8)
}

/// Frames nothing extra: encodes the given frame bytes through the
/// reversed-bit codec and embeds them into the key image.
pub fn embed_frame(key: &GrayImage, frame: &[u8]) -> Result<GrayImage> {
    let bits = bitcodec::bytes_to_reversed_bits(frame);
    stego::embed_bits(key, &bits)
}

/// Recovers a framed payload from a stego/key pair: peeks the header
/// for the total length, extracts the full frame, and parses it.
pub fn extract_frame(key: &GrayImage, stego: &GrayImage) -> Result<PayloadFrame> {
    let total_bits = header_peek_length(key, stego)?;
    let bits = stego::extract_bits(key, stego, total_bits)?;
    let bytes = bitcodec::reversed_bits_to_bytes(&bits)?;
    parse_frame(&bytes)
}
