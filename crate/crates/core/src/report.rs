use std::fmt;

use crate::graph::{ColorId, Edge};

/// Colour of an added edge: one already present, or any colour absent from
/// the host (all absent colours are interchangeable).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColorChoice {
    Existing(ColorId),
    Fresh,
}

impl fmt::Display for ColorChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorChoice::Existing(c) => write!(f, "{c}"),
            ColorChoice::Fresh => f.write_str("fresh"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The property holds and there is nothing more to show.
    Holds,
    /// A (rainbow) clique, sorted ascending.
    Clique(Vec<usize>),
    /// `map[i]` is the host vertex of pattern vertex `i`.
    Embedding(Vec<usize>),
    /// Adding `edge` in `color` creates no new rainbow copy.
    ColoredAddition { edge: Edge, color: ColorChoice },
    /// Adding `edge` creates no new copy.
    Addition(Edge),
    /// Removing `removed` then adding `added` creates no (new) copy.
    Exchange { removed: Vec<Edge>, added: Vec<Edge> },
    /// A membership property failed, at a vertex or colour when applicable.
    Property {
        number: u8,
        vertex: Option<usize>,
        color: Option<ColorId>,
    },
    /// A non-edge ordering that works.
    Ordering(Vec<Edge>),
    Note(String),
}

fn edges(f: &mut fmt::Formatter<'_>, es: &[Edge]) -> fmt::Result {
    let parts: Vec<String> = es.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    f.write_str(&parts.join(","))
}

fn list(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Holds => f.write_str("none"),
            Witness::Clique(vs) => write!(f, "clique={}", list(vs)),
            Witness::Embedding(vs) => write!(f, "embedding={}", list(vs)),
            Witness::ColoredAddition { edge: (u, v), color } => {
                write!(f, "add={u}-{v} color={color}")
            }
            Witness::Addition((u, v)) => write!(f, "add={u}-{v}"),
            Witness::Exchange { removed, added } => {
                f.write_str("remove=")?;
                edges(f, removed)?;
                f.write_str(" add=")?;
                edges(f, added)
            }
            Witness::Property {
                number,
                vertex,
                color,
            } => {
                write!(f, "property={number}")?;
                if let Some(v) = vertex {
                    write!(f, " vertex={v}")?;
                }
                if let Some(c) = color {
                    write!(f, " color={c}")?;
                }
                Ok(())
            }
            Witness::Ordering(es) => {
                f.write_str("order=")?;
                edges(f, es)
            }
            Witness::Note(s) => write!(f, "note={:?}", s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub verdict: bool,
    pub witness: Witness,
}

impl VerificationReport {
    pub fn holds(witness: Witness) -> Self {
        VerificationReport {
            verdict: true,
            witness,
        }
    }

    pub fn fails(witness: Witness) -> Self {
        VerificationReport {
            verdict: false,
            witness,
        }
    }

    pub fn from_verdict(verdict: bool, witness: Witness) -> Self {
        VerificationReport { verdict, witness }
    }
}
