//! Argument definitions for the `tlmp` binary.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "tlmp", version, about = "Exact computations for matched pairs of 3-Lie algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Include basis representatives in cohomology output.
    #[arg(long, global = true)]
    pub basis: bool,

    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the axioms of a structure.
    Verify {
        what: VerifyWhat,
        /// The bundle to verify.
        target: PathBuf,
        /// Matched pair the target lives over (representation, morphism,
        /// deformation).
        #[arg(long)]
        pair: Option<PathBuf>,
        /// Representation for the fiber part of an automorphism pair.
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Extension for an extension automorphism.
        #[arg(long)]
        ext: Option<PathBuf>,
        /// Automorphism pair an extension automorphism should restrict to.
        #[arg(long)]
        aut: Option<PathBuf>,
    },
    /// Construct a bicrossed product, semidirect product or extension.
    Build {
        what: BuildWhat,
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
        /// 2-cocycle for `extension`.
        #[arg(long)]
        cocycle: Option<PathBuf>,
        /// Where to write the constructed bundle; embedded in the report
        /// when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimensions of cochains, cocycles, coboundaries and cohomology.
    Cohomology {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        degree: u8,
    },
    /// Cocycle, coboundary and cohomology-class tests for a 2-cochain.
    Cocycle {
        action: CocycleAction,
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
        /// Second cochain for `cohomologous`.
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// Wells class, inducibility and lifting of automorphism pairs.
    Wells {
        action: WellsAction,
        #[arg(long)]
        ext: PathBuf,
        /// Automorphism pair (not needed for `exact`).
        #[arg(long)]
        aut: Option<PathBuf>,
        /// Section to use instead of the default one.
        #[arg(long)]
        section: Option<PathBuf>,
        /// Where `lift` writes the total automorphism bundle.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reports over the built-in fixtures or random instances.
    Report {
        what: ReportWhat,
        /// Number of random instances.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Write the named fixture bundles to a directory.
    Fixtures {
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum VerifyWhat {
    Jacobi,
    MatchedPair,
    Representation,
    Morphism,
    Deformation,
    Extension,
    ExtensionAutomorphism,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum BuildWhat {
    Bicross,
    Semidirect,
    Extension,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum CocycleAction {
    Check,
    Coboundary,
    Cohomologous,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum WellsAction {
    Class,
    Induce,
    Lift,
    Exact,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum ReportWhat {
    Fixtures,
    Random,
}
