//! PGM reading and writing.
//!
//! Supports the Portable GrayMap formats P2 (ASCII) and P5 (binary)
//! with maxval 255, which is all the scheme needs: an 8-bit grayscale
//! carrier that survives byte-exact round trips. The writer emits one
//! canonical byte sequence per variant so stego files are stable across
//! runs and implementations.

use crate::error::{Error, Result};
use crate::image::GrayImage;
use std::fmt::Write as _;

/// The two supported PGM encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgmVariant {
    /// P2, samples as whitespace-separated ASCII decimals.
    Ascii,
    /// P5, samples as raw bytes.
    Binary,
}

/// Cursor over a PGM header that skips whitespace and `#` comments
/// between tokens.
struct HeaderCursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> HeaderCursor<'a> {
    fn new(data: &'a [u8]) -> Self {
        Self { data, pos: 0 }
    }

    fn skip_whitespace_and_comments(&mut self) {
        while self.pos < self.data.len() {
            let b = self.data[self.pos];
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while self.pos < self.data.len() && self.data[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Result<&'a str> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while self.pos < self.data.len()
            && !self.data[self.pos].is_ascii_whitespace()
            && self.data[self.pos] != b'#'
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::MalformedSample("unexpected end of header".into()));
        }
        std::str::from_utf8(&self.data[start..self.pos])
            .map_err(|_| Error::MalformedSample("non-ASCII header token".into()))
    }

    fn number(&mut self) -> Result<u32> {
        let tok = self.token()?;
        tok.parse::<u32>()
            .map_err(|_| Error::MalformedSample(format!("expected a number, found {tok:?}")))
    }
}

/// Parses a P2 or P5 image with maxval 255.
pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let mut cur = HeaderCursor::new(bytes);
    let magic = cur.token()?;
    let variant = match magic {
        "P2" => PgmVariant::Ascii,
        "P5" => PgmVariant::Binary,
        other => return Err(Error::UnsupportedFormat(other.to_string())),
    };
    let width = cur.number()?;
    let height = cur.number()?;
    let maxval = cur.number()?;
    if maxval != 255 {
        return Err(Error::UnsupportedDepth(maxval));
    }
    if width == 0 || height == 0 {
        return Err(Error::InvalidDimensions { width, height });
    }
    let expected = width as usize * height as usize;

    let pixels = match variant {
        PgmVariant::Binary => {
            // Exactly one whitespace byte separates the maxval from the
            // raster; skipping more could eat raster bytes that happen
            // to look like whitespace.
            let mut pos = cur.pos;
            if pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let raster = &bytes[pos..];
            if raster.len() < expected {
                return Err(Error::TruncatedImage {
                    expected,
                    actual: raster.len(),
                });
            }
            raster[..expected].to_vec()
        }
        PgmVariant::Ascii => {
            let raster = std::str::from_utf8(&bytes[cur.pos..])
                .map_err(|_| Error::MalformedSample("non-ASCII sample data".into()))?;
            let mut pixels = Vec::with_capacity(expected);
            for tok in raster.split_ascii_whitespace() {
                let value: u32 = tok.parse().map_err(|_| {
                    Error::MalformedSample(format!("expected a grey value, found {tok:?}"))
                })?;
                if value > 255 {
                    return Err(Error::MalformedSample(format!(
                        "grey value {value} out of range 0..=255"
                    )));
                }
                pixels.push(value as u8);
            }
            if pixels.len() != expected {
                return Err(Error::TruncatedImage {
                    expected,
                    actual: pixels.len(),
                });
            }
            pixels
        }
    };

    GrayImage::new(width, height, pixels)
}

/// Serializes an image in the canonical encoding of the chosen variant:
/// header `<magic>\n<width> <height>\n255\n`, then for P5 the raw pixel
/// bytes, for P2 one line per row with single-space-separated samples.
pub fn write_pgm(img: &GrayImage, variant: PgmVariant) -> Vec<u8> {
    let magic = match variant {
        PgmVariant::Ascii => "P2",
        PgmVariant::Binary => "P5",
    };
    let mut out = format!("{magic}\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    match variant {
        PgmVariant::Binary => out.extend_from_slice(img.pixels()),
        PgmVariant::Ascii => {
            let mut text = String::new();
            for row in img.pixels().chunks(img.width() as usize) {
                for (i, px) in row.iter().enumerate() {
                    if i > 0 {
                        text.push(' ');
                    }
                    let _ = write!(text, "{px}");
                }
                text.push('\n');
            }
            out.extend_from_slice(text.as_bytes());
        }
    }
    out
}
