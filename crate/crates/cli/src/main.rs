use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diagrect_cli::commands::{self, GraphFormat, Theorem};
use diagrect_cli::CliError;

/// Diagonal rectangulations, Baxter permutations and their flip graphs.
#[derive(Parser)]
#[command(name = "diagrect", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the drawing of a permutation as a label matrix.
    Map { perm: String },
    /// Print the Baxter, twisted Baxter and rightmost representatives.
    Perms(Input),
    /// Classify every interior edge of a drawing.
    Flips(Input),
    /// Flip one edge, given as `a|b:h` or `a|b:v`.
    Flip {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        edge: String,
    },
    /// Export the flip graph on all drawings with `n` rectangles.
    Graph {
        n: usize,
        #[command(flatten)]
        format: FormatFlag,
    },
    /// Check the flip characterizations exhaustively for size `n`.
    Verify {
        n: usize,
        #[arg(long, value_enum, default_value_t = TheoremArg::All)]
        theorem: TheoremArg,
    },
    /// Render a drawing as SVG.
    Render {
        #[command(flatten)]
        input: Input,
        /// Output path, `-` for stdout.
        #[arg(long)]
        svg: PathBuf,
    },
    /// List the permutations of size `n` avoiding a pattern class.
    Enumerate {
        n: usize,
        #[arg(long, default_value = "baxter")]
        class: String,
    },
}

#[derive(Args)]
struct Input {
    /// Label matrix file, `-` for stdin.
    #[arg(default_value = "-")]
    file: PathBuf,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FormatFlag {
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Main,
    Lr,
    Char,
    Counts,
    Inversion,
    All,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Main => Theorem::Main,
            TheoremArg::Lr => Theorem::Lr,
            TheoremArg::Char => Theorem::Char,
            TheoremArg::Counts => Theorem::Counts,
            TheoremArg::Inversion => Theorem::Inversion,
            TheoremArg::All => Theorem::All,
        }
    }
}

fn read_input(input: &Input) -> Result<String, CliError> {
    let io_err = |e: io::Error| CliError::usage(format!("{}: {e}", input.file.display()));
    if input.file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(&input.file).map_err(io_err)
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Map { perm } => commands::map(&perm),
        Command::Perms(input) => commands::perms(&read_input(&input)?),
        Command::Flips(input) => commands::flips(&read_input(&input)?),
        Command::Flip { input, edge } => commands::flip(&read_input(&input)?, &edge),
        Command::Graph { n, format } => {
            let f = if format.dot {
                GraphFormat::Dot
            } else {
                GraphFormat::Json
            };
            commands::graph(n, f)
        }
        Command::Verify { n, theorem } => commands::verify(n, theorem.into()),
        Command::Render { input, svg } => {
            let doc = commands::render(&read_input(&input)?)?;
            if svg.as_os_str() == "-" {
                Ok(doc)
            } else {
                std::fs::write(&svg, doc).map_err(|e| CliError::usage(format!("{}: {e}", svg.display())))?;
                Ok(String::new())
            }
        }
        Command::Enumerate { n, class } => commands::enumerate(n, &class),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(CliError::USAGE);
            }
            ExitCode::SUCCESS
        }
        Err(e) if e.code == CliError::VERIFY_FAILED => {
            print!("{}", e.message);
            ExitCode::from(e.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
