//! Command-line front end. Every subcommand prints plain text to standard
//! output; domain errors exit with 1 and a one-line diagnostic on standard
//! error, usage and parse errors exit with 2.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand};

use crate::constructions::{disconnected_word, disconnected_word_short, empty_graph_word, extend};
use crate::enumerate::{
    k_uniform_words, minimal_length_words, representation_number, squarefree_words_for_complete,
    SearchBudget,
};
use crate::error::Error;
use crate::graph::{derive_graph, represents, Graph};
use crate::squares::{all_squares, desquare, find_first_square, is_square_free};
use crate::thue_morse::{squarefree_ternary, thue_morse_prefix};
use crate::word::Word;

#[derive(Parser, Debug)]
#[command(name = "wordrep", version, about = "Square-free word-representations of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report uniformity, square-freeness and (given a graph) representation.
    Check {
        /// Word literal or path to a file holding one.
        word: String,
        /// Graph file.
        graph: Option<String>,
    },
    /// Print the graph a word represents.
    Derive { word: String },
    /// Remove all squares from a representant of a connected graph.
    Desquare { word: String, graph: String },
    /// Extend a uniform representant by blocks driven by the ternary stream.
    Extend {
        word: String,
        graph: String,
        #[arg(long, default_value_t = 1)]
        blocks: usize,
    },
    /// Square-free representant of a graph from its connected components.
    Disconnected {
        graph: String,
        /// Word for one component (repeatable); other components use a
        /// minimal-length representant.
        #[arg(long = "word")]
        words: Vec<String>,
        /// Use the shorter construction around the first non-complete component.
        #[arg(long)]
        short: bool,
    },
    /// Square-free representant of the edgeless graph on n vertices.
    EmptyWord { n: u64 },
    /// All square-free representants of K_n.
    EnumerateKn { n: u64 },
    /// Representation number of a graph.
    Repnum {
        graph: String,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = 50_000_000)]
        node_limit: u64,
    },
    /// All minimal-length representants of a graph.
    Minwords {
        graph: String,
        #[arg(long, default_value_t = 12)]
        max_length: usize,
        #[arg(long, default_value_t = 50_000_000)]
        node_limit: u64,
    },
    /// All k-uniform representants of a graph.
    Kuniform {
        graph: String,
        k: usize,
        #[arg(long, default_value_t = 50_000_000)]
        node_limit: u64,
    },
    /// Prefix of the Thue-Morse sequence.
    ThueMorse {
        #[arg(long)]
        bits: usize,
    },
    /// Prefix of the square-free ternary word.
    Ternary {
        #[arg(long)]
        length: usize,
    },
    /// List the squares of a word.
    Squares {
        word: String,
        #[arg(long)]
        first: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("io: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "{e}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            2
        }
    }
}

fn read_word(arg: &str) -> Result<Word, Failure> {
    let path = Path::new(arg);
    let text = if path.is_file() { fs::read_to_string(path)? } else { arg.to_owned() };
    Ok(text.parse()?)
}

fn read_graph(arg: &str) -> Result<Graph, Failure> {
    let text = if arg.trim_start().starts_with("vertices:") {
        arg.to_owned()
    } else {
        fs::read_to_string(arg)?
    };
    Ok(text.parse()?)
}

fn print_words(out: &mut dyn Write, words: &[Word]) -> Result<(), Failure> {
    for w in words {
        writeln!(out, "{w}")?;
    }
    writeln!(out, "count: {}", words.len())?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Check { word, graph } => {
            let w = read_word(&word)?;
            if let Some(graph) = graph {
                let g = read_graph(&graph)?;
                writeln!(out, "represents: {}", represents(&w, &g))?;
            }
            writeln!(out, "square-free: {}", is_square_free(&w))?;
            match w.uniformity()? {
                Some(k) => writeln!(out, "uniformity: {k}")?,
                None => writeln!(out, "uniformity: none")?,
            }
        }
        Command::Derive { word } => {
            write!(out, "{}", derive_graph(&read_word(&word)?)?)?;
        }
        Command::Desquare { word, graph } => {
            let w = desquare(&read_word(&word)?, &read_graph(&graph)?)?;
            writeln!(out, "{w}")?;
        }
        Command::Extend { word, graph, blocks } => {
            let w = extend(&read_word(&word)?, &read_graph(&graph)?, blocks)?;
            writeln!(out, "{w}")?;
        }
        Command::Disconnected { graph, words, short } => {
            let g = read_graph(&graph)?;
            let w = disconnected(&g, &words, short)?;
            writeln!(out, "{w}")?;
        }
        Command::EmptyWord { n } => writeln!(out, "{}", empty_graph_word(n)?)?,
        Command::EnumerateKn { n } => {
            let (words, _) = squarefree_words_for_complete(n)?;
            print_words(out, &words)?;
        }
        Command::Repnum { graph, max_k, node_limit } => {
            let g = read_graph(&graph)?;
            let budget = SearchBudget::new(12, max_k, node_limit)?;
            match representation_number(&g, &budget)? {
                Some(rep) => {
                    writeln!(out, "k: {}", rep.k)?;
                    writeln!(out, "witness: {}", rep.witness)?;
                }
                None => writeln!(out, "k: none (max-k {max_k})")?,
            }
        }
        Command::Minwords { graph, max_length, node_limit } => {
            let g = read_graph(&graph)?;
            let budget = SearchBudget::new(max_length, 4, node_limit)?;
            let (_, words) = minimal_length_words(&g, &budget)?;
            print_words(out, &words)?;
        }
        Command::Kuniform { graph, k, node_limit } => {
            let g = read_graph(&graph)?;
            let budget = SearchBudget::new(12, 4, node_limit)?;
            print_words(out, &k_uniform_words(&g, k, &budget)?)?;
        }
        Command::ThueMorse { bits } => {
            let s: String = thue_morse_prefix(bits).iter().map(|b| char::from(b'0' + b)).collect();
            writeln!(out, "{s}")?;
        }
        Command::Ternary { length } => writeln!(out, "{}", squarefree_ternary(length))?,
        Command::Squares { word, first } => {
            let w = read_word(&word)?;
            let squares = if first { find_first_square(&w).into_iter().collect() } else { all_squares(&w) };
            for sq in &squares {
                let tag = if sq.trivial { " trivial" } else { "" };
                writeln!(out, "{} {}{tag}", sq.start, sq.root)?;
            }
            writeln!(out, "count: {}", squares.len())?;
        }
    }
    Ok(())
}

/// Pairs each component with a supplied word (matched by alphabet) or a
/// minimal-length representant, then applies the chosen construction.
fn disconnected(g: &Graph, supplied: &[String], short: bool) -> Result<Word, Failure> {
    let components = g.components();
    let mut words: Vec<Option<Word>> = vec![None; components.len()];
    for arg in supplied {
        let w = read_word(arg)?;
        let alphabet = w.alphabet();
        let slot = components
            .iter()
            .position(|c| c.vertices() == &alphabet)
            .ok_or_else(|| Failure::Usage(format!("word {w} matches no component")))?;
        words[slot] = Some(w);
    }
    let budget = SearchBudget::default();
    let short_index = if short {
        let j = components.iter().position(|c| !c.is_complete()).ok_or(Error::ComponentComplete(1))?;
        let uniform = words[j].as_ref().is_some_and(|w| w.uniformity().ok().flatten().is_some_and(|k| k >= 2));
        if !uniform {
            let rep = representation_number(&components[j], &budget)?
                .ok_or_else(|| Error::BudgetExceeded("no uniform representant found".into()))?;
            words[j] = Some(rep.witness);
        }
        Some(j + 1)
    } else {
        None
    };
    let mut pairs = Vec::with_capacity(components.len());
    for (c, w) in components.into_iter().zip(words) {
        let w = match w {
            Some(w) => w,
            None => minimal_length_words(&c, &budget)?.1.swap_remove(0),
        };
        pairs.push((c, w));
    }
    let word = match short_index {
        Some(j) => disconnected_word_short(&pairs, j)?,
        None => disconnected_word(&pairs)?,
    };
    Ok(word)
}
