//! Codes (vertex collections) in a Johnson graph, and the plain-text file
//! format used to exchange them.
//!
//! The file format is line oriented and diff friendly: a header `n w`, then
//! one block per line as space-separated, ascending, 1-based elements. Parsing
//! canonicalizes (sorts blocks in colex order, drops duplicates), so any file
//! written by this crate re-parses to an equal code byte for byte.

use std::fmt;

use thiserror::Error;

use crate::johnson::{JohnsonError, JohnsonParams, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Johnson(#[from] JohnsonError),
    #[error("a code must contain at least one block")]
    Empty,
}

/// Parse failure for the code file format, naming the line and field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeFileError {
    #[error("line 1: missing `n w` header")]
    MissingHeader,
    #[error("line {line}: field {field}: expected an integer, got {got:?}")]
    NotAnInteger {
        line: usize,
        field: usize,
        got: String,
    },
    #[error("line 1: header must be exactly two fields `n w`, got {got}")]
    BadHeaderArity { got: usize },
    #[error("line {line}: field {field}: {source}")]
    BadElement {
        line: usize,
        field: usize,
        source: JohnsonError,
    },
    #[error("line {line}: block has {got} distinct elements, expected w={w}")]
    WrongBlockSize { line: usize, got: u32, w: u32 },
    #[error("invalid parameters in header: {source}")]
    BadParams { source: JohnsonError },
    #[error("file contains no blocks")]
    NoBlocks,
}

/// A nonempty, canonically sorted, duplicate-free collection of vertices of
/// `J(n, w)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Code {
    params: JohnsonParams,
    blocks: Vec<Subset>,
}

impl Code {
    /// Validates every block and canonicalizes the list (colex sort, dedup).
    pub fn new(params: JohnsonParams, mut blocks: Vec<Subset>) -> Result<Self, CodeError> {
        for &b in &blocks {
            params.check_vertex(b)?;
        }
        blocks.sort_unstable();
        blocks.dedup();
        if blocks.is_empty() {
            return Err(CodeError::Empty);
        }
        Ok(Code { params, blocks })
    }

    /// Builds a code from 1-based element lists.
    pub fn from_element_lists(
        params: JohnsonParams,
        lists: &[Vec<u32>],
    ) -> Result<Self, CodeError> {
        let blocks = lists
            .iter()
            .map(|l| Subset::from_elements(l, params.n()))
            .collect::<Result<Vec<_>, _>>()?;
        Code::new(params, blocks)
    }

    pub fn params(&self) -> JohnsonParams {
        self.params
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.blocks.binary_search(&s).is_ok()
    }

    /// True when the code is all of `J(n, w)`.
    pub fn is_full(&self) -> bool {
        self.blocks.len() as u128 == self.params.vertex_count()
    }

    /// Applies a ground-set permutation; `perm[i]` is the 0-based image of
    /// element `i + 1`. The result is re-canonicalized.
    pub fn relabel(&self, perm: &[u32]) -> Code {
        debug_assert_eq!(perm.len(), self.params.n() as usize);
        let mut blocks: Vec<Subset> = self
            .blocks
            .iter()
            .map(|b| {
                let mut bits = 0u64;
                let mut m = b.bits();
                while m != 0 {
                    let p = m.trailing_zeros() as usize;
                    bits |= 1 << perm[p];
                    m &= m - 1;
                }
                Subset::from_bits(bits)
            })
            .collect();
        blocks.sort_unstable();
        Code {
            params: self.params,
            blocks,
        }
    }

    /// Serializes to the canonical text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.params.n(), self.params.w()));
        for b in &self.blocks {
            let elems = b.elements();
            for (i, e) in elems.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&e.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text format. Blank lines are ignored.
    pub fn from_text(text: &str) -> Result<Self, CodeFileError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (_, header) = lines.next().ok_or(CodeFileError::MissingHeader)?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(CodeFileError::BadHeaderArity { got: fields.len() });
        }
        let n: u32 = fields[0]
            .parse()
            .map_err(|_| CodeFileError::NotAnInteger {
                line: 1,
                field: 1,
                got: fields[0].to_string(),
            })?;
        let w: u32 = fields[1]
            .parse()
            .map_err(|_| CodeFileError::NotAnInteger {
                line: 1,
                field: 2,
                got: fields[1].to_string(),
            })?;
        let params = JohnsonParams::new(n, w).map_err(|source| CodeFileError::BadParams { source })?;

        let mut blocks = Vec::new();
        for (line, l) in lines {
            let mut elements = Vec::new();
            for (field, tok) in l.split_whitespace().enumerate() {
                let e: u32 = tok.parse().map_err(|_| CodeFileError::NotAnInteger {
                    line,
                    field: field + 1,
                    got: tok.to_string(),
                })?;
                elements.push(e);
            }
            let block = Subset::from_elements(&elements, n).map_err(|source| {
                let bad = elements
                    .iter()
                    .position(|&e| e == 0 || e > n)
                    .unwrap_or(0);
                CodeFileError::BadElement {
                    line,
                    field: bad + 1,
                    source,
                }
            })?;
            if block.len() != w {
                return Err(CodeFileError::WrongBlockSize {
                    line,
                    got: block.len(),
                    w,
                });
            }
            blocks.push(block);
        }
        if blocks.is_empty() {
            return Err(CodeFileError::NoBlocks);
        }
        blocks.sort_unstable();
        blocks.dedup();
        Ok(Code { params, blocks })
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} code with {} blocks", self.params, self.blocks.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code_from(lists: &[&[u32]], n: u32, w: u32) -> Code {
        let params = JohnsonParams::new(n, w).unwrap();
        Code::from_element_lists(params, &lists.iter().map(|l| l.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn canonicalizes_blocks() {
        let c = code_from(&[&[4, 5, 6], &[1, 2, 3], &[1, 2, 3]], 6, 3);
        assert_eq!(c.len(), 2);
        assert_eq!(c.blocks()[0].elements(), vec![1, 2, 3]);
        assert_eq!(c.blocks()[1].elements(), vec![4, 5, 6]);
    }

    #[test]
    fn rejects_bad_blocks() {
        let params = JohnsonParams::new(6, 3).unwrap();
        assert!(Code::from_element_lists(params, &[vec![1, 2]]).is_err());
        assert!(Code::from_element_lists(params, &[vec![1, 2, 7]]).is_err());
        assert!(Code::new(params, vec![]).is_err());
    }

    #[test]
    fn text_roundtrip_is_canonical() {
        let c = code_from(&[&[4, 5, 6], &[1, 2, 3]], 6, 3);
        let text = c.to_text();
        assert_eq!(text, "6 3\n1 2 3\n4 5 6\n");
        let parsed = Code::from_text(&text).unwrap();
        assert_eq!(parsed, c);
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn parse_errors_name_line_and_field() {
        let err = Code::from_text("6 3\n1 2 x\n").unwrap_err();
        assert_eq!(
            err,
            CodeFileError::NotAnInteger {
                line: 2,
                field: 3,
                got: "x".into()
            }
        );
        let err = Code::from_text("6 3\n1 2 9\n").unwrap_err();
        assert!(matches!(err, CodeFileError::BadElement { line: 2, field: 3, .. }));
        let err = Code::from_text("6\n1 2 3\n").unwrap_err();
        assert!(matches!(err, CodeFileError::BadHeaderArity { got: 1 }));
        let err = Code::from_text("6 3\n").unwrap_err();
        assert_eq!(err, CodeFileError::NoBlocks);
        let err = Code::from_text("6 3\n1 2 2\n").unwrap_err();
        assert!(matches!(err, CodeFileError::WrongBlockSize { line: 2, got: 2, w: 3 }));
    }

    #[test]
    fn relabel_permutes_elements() {
        let c = code_from(&[&[1, 2, 3]], 6, 3);
        // Swap 1 <-> 6.
        let perm = [5, 1, 2, 3, 4, 0];
        let r = c.relabel(&perm);
        assert_eq!(r.blocks()[0].elements(), vec![2, 3, 6]);
    }
}
