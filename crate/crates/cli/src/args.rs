use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "harmonic-cert", version, about = "Certified checks of Ramanujan's harmonic-number expansion")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify 0 < Θ_n < 1 and/or the corollary bounds for n = 1..=n_max
    Certify(CertifyArgs),
    /// Tabulate H_n against truncations of the expansion
    Table(TableArgs),
    /// Check the partial-fraction and Kummer identities exactly
    Identities(IdentitiesArgs),
    /// Scan sequences converging to the best-possible constants
    Limits(LimitsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Subject {
    Theorem,
    Corollaries,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(value_enum)]
    pub subject: Subject,
    #[arg(long, default_value_t = 100)]
    pub n_max: u64,
    /// Starting precision; escalation doubles it up to 4096 bits
    #[arg(long, default_value_t = 128)]
    pub precision_bits: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value = "1,2,3,4,5,10,100,1000")]
    pub n_list: String,
    /// Number of expansion terms kept, 0..=5
    #[arg(long, default_value_t = 5)]
    pub terms: usize,
    #[arg(long, default_value_t = 128)]
    pub precision_bits: u32,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long, default_value_t = 1000)]
    pub k_max: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    /// scaled_lambda, scaled_rho, delta or cesaro_c
    pub quantity: String,
    #[arg(long, default_value = "1,2,5,10,50,100,1000")]
    pub n_list: String,
    #[arg(long, default_value_t = 128)]
    pub precision_bits: u32,
    #[command(flatten)]
    pub output: Output,
}
