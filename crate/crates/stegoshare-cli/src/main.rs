//! Command-line front end: embed, extract, share and analyze.
//!
//! Exit codes: 0 success, 1 usage, 2 bad or mismatched data (including
//! authentication failures), 3 I/O.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stegoshare_core::analysis::compare;
use stegoshare_core::bitcodec::{bytes_to_reversed_bits, reversed_bits_to_bytes};
use stegoshare_core::payload::{extract_frame, frame_image, frame_text, PayloadFrame};
use stegoshare_core::pgm::{read_pgm, write_pgm, PgmVariant};
use stegoshare_core::sharing::{merge_shares, split_image, PixelShares};
use stegoshare_core::stego::{capacity_bits, embed_bits, extract_bits};
use stegoshare_core::GrayImage;

#[derive(Parser)]
#[command(
    name = "stegoshare",
    version,
    about = "Hide and recover secrets in grayscale PGM images using share-based LSB-XOR embedding"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Embed a secret into a key image, writing the stego image
    Embed(EmbedArgs),
    /// Recover a secret from a stego image given the key (or both key shares)
    Extract(ExtractArgs),
    /// Export the two odd/even pixel shares of a key image
    Share(ShareArgs),
    /// Compare a key and a stego image, writing a histogram CSV report
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct EmbedArgs {
    /// Key (cover) image, PGM P2 or P5
    #[arg(long)]
    key: PathBuf,
    /// Secret input: text or raw bytes, or a PGM file in image mode
    #[arg(long = "in")]
    input: PathBuf,
    /// Output stego image (binary PGM)
    #[arg(long)]
    out: PathBuf,
    /// How to treat the secret
    #[arg(long, value_enum)]
    mode: EmbedMode,
    /// Raw mode only: embed just the first N bytes of the input
    #[arg(long)]
    raw_len: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum EmbedMode {
    /// Framed text payload (self-describing)
    Text,
    /// Framed image payload (self-describing, input must be PGM)
    Image,
    /// Raw bytes, no framing; extraction needs the length out of band
    Raw,
}

#[derive(Args)]
struct ExtractArgs {
    /// Key image as a single file
    #[arg(
        long,
        required_unless_present = "key_share1",
        conflicts_with_all = ["key_share1", "key_share2"]
    )]
    key: Option<PathBuf>,
    /// First key share (single-row PGM); requires --key-share2
    #[arg(long, requires = "key_share2")]
    key_share1: Option<PathBuf>,
    /// Second key share (single-row PGM); requires --key-share1
    #[arg(long, requires = "key_share1")]
    key_share2: Option<PathBuf>,
    /// Stego image
    #[arg(long)]
    stego: PathBuf,
    /// Output file: recovered bytes, or a binary PGM for image payloads
    #[arg(long)]
    out: PathBuf,
    /// Framed payloads self-describe; raw mode needs --raw-len
    #[arg(long, value_enum, default_value_t = ExtractMode::Framed)]
    mode: ExtractMode,
    /// Number of raw bytes to extract (raw mode)
    #[arg(long)]
    raw_len: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum ExtractMode {
    Framed,
    Raw,
}

#[derive(Args)]
struct ShareArgs {
    /// Key image to split
    #[arg(long)]
    key: PathBuf,
    /// Output file for share 1 (odd positions)
    #[arg(long)]
    out1: PathBuf,
    /// Output file for share 2 (even positions)
    #[arg(long)]
    out2: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Key (reference) image
    #[arg(long)]
    key: PathBuf,
    /// Stego (or any comparison) image of the same dimensions
    #[arg(long)]
    stego: PathBuf,
    /// Output CSV report
    #[arg(long)]
    csv: PathBuf,
}

enum CliError {
    /// Bad command line (exit 1).
    Usage(String),
    /// Bad or mismatched data (exit 2).
    Data(String),
    /// Filesystem failure (exit 3).
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Data(msg) | CliError::Io(msg) => f.write_str(msg),
        }
    }
}

impl From<stegoshare_core::Error> for CliError {
    fn from(e: stegoshare_core::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn read_image(path: &Path) -> Result<GrayImage, CliError> {
    let bytes = read_file(path)?;
    read_pgm(&bytes).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Embed(args) => cmd_embed(args),
        Command::Extract(args) => cmd_extract(args),
        Command::Share(args) => cmd_share(args),
        Command::Analyze(args) => cmd_analyze(args),
    }
}

fn cmd_embed(args: EmbedArgs) -> Result<(), CliError> {
    if args.raw_len.is_some() && args.mode != EmbedMode::Raw {
        return Err(CliError::Usage(
            "--raw-len only applies to --mode raw".into(),
        ));
    }

    let key = read_image(&args.key)?;
    let secret = read_file(&args.input)?;

    let message = match args.mode {
        EmbedMode::Text => frame_text(&secret),
        EmbedMode::Image => {
            let img = read_pgm(&secret)
                .map_err(|e| CliError::Data(format!("{}: {e}", args.input.display())))?;
            frame_image(&img)?
        }
        EmbedMode::Raw => match args.raw_len {
            Some(n) if n > secret.len() => {
                return Err(CliError::Usage(format!(
                    "--raw-len {n} exceeds the {}-byte input",
                    secret.len()
                )));
            }
            Some(n) => secret[..n].to_vec(),
            None => secret,
        },
    };

    let bits = bytes_to_reversed_bits(&message);
    let stego = embed_bits(&key, &bits)?;
    write_file(&args.out, &write_pgm(&stego, PgmVariant::Binary))?;
    println!(
        "capacity: used {} of {} bits",
        bits.len(),
        capacity_bits(&key)
    );
    Ok(())
}

fn cmd_extract(args: ExtractArgs) -> Result<(), CliError> {
    let stego = read_image(&args.stego)?;
    let key = match (&args.key, &args.key_share1, &args.key_share2) {
        (Some(path), _, _) => read_image(path)?,
        (None, Some(s1), Some(s2)) => key_from_shares(s1, s2, &stego)?,
        _ => unreachable!("clap enforces a key source"),
    };

    match args.mode {
        ExtractMode::Framed => match extract_frame(&key, &stego)? {
            PayloadFrame::Text(bytes) => {
                write_file(&args.out, &bytes)?;
                println!(
                    "recovered text payload: {} bytes -> {}",
                    bytes.len(),
                    args.out.display()
                );
            }
            PayloadFrame::Image(img) => {
                write_file(&args.out, &write_pgm(&img, PgmVariant::Binary))?;
                println!(
                    "recovered image payload: {}x{} -> {}",
                    img.width(),
                    img.height(),
                    args.out.display()
                );
            }
        },
        ExtractMode::Raw => {
            let nbytes = args
                .raw_len
                .ok_or_else(|| CliError::Usage("--raw-len is required in raw mode".into()))?;
            let nbits = nbytes
                .checked_mul(8)
                .ok_or_else(|| CliError::Usage(format!("--raw-len {nbytes} is too large")))?;
            let bits = extract_bits(&key, &stego, nbits)?;
            let bytes = reversed_bits_to_bytes(&bits)?;
            write_file(&args.out, &bytes)?;
            println!(
                "recovered raw payload: {} bytes -> {}",
                bytes.len(),
                args.out.display()
            );
        }
    }
    Ok(())
}

/// Rebuilds the key image from its two exported shares. The stego image
/// supplies the dimensions; the shares only carry the pixel sequences.
fn key_from_shares(
    share1_path: &Path,
    share2_path: &Path,
    stego: &GrayImage,
) -> Result<GrayImage, CliError> {
    let share1 = read_image(share1_path)?.into_pixels();
    let share2 = read_image(share2_path)?.into_pixels();
    let total_len = share1.len() + share2.len();
    let shares = PixelShares {
        share1,
        share2,
        total_len,
    };
    let pixels = merge_shares(&shares)?;
    GrayImage::new(stego.width(), stego.height(), pixels).map_err(|e| {
        CliError::Data(format!(
            "key shares do not match the stego image dimensions: {e}"
        ))
    })
}

fn cmd_share(args: ShareArgs) -> Result<(), CliError> {
    let key = read_image(&args.key)?;
    let shares = split_image(&key);

    let share1 = GrayImage::new(shares.share1.len() as u32, 1, shares.share1)?;
    write_file(&args.out1, &write_pgm(&share1, PgmVariant::Binary))?;
    println!(
        "share 1: {} pixels -> {}",
        share1.pixel_count(),
        args.out1.display()
    );

    if shares.share2.is_empty() {
        eprintln!("notice: key image has a single pixel; share 2 is empty and no file was written");
    } else {
        let share2 = GrayImage::new(shares.share2.len() as u32, 1, shares.share2)?;
        write_file(&args.out2, &write_pgm(&share2, PgmVariant::Binary))?;
        println!(
            "share 2: {} pixels -> {}",
            share2.pixel_count(),
            args.out2.display()
        );
    }
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let key = read_image(&args.key)?;
    let stego = read_image(&args.stego)?;
    let report = compare(&key, &stego)?;
    write_file(&args.csv, report.to_csv().as_bytes())?;
    println!(
        "changed pixels: {}; max |delta|: {}; psnr: {} dB",
        report.changed_pixels, report.max_abs_pixel_delta, report.psnr_db
    );
    Ok(())
}
