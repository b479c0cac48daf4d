//! Parenthesis-free prefix (Polish) notation.
//!
//! Every token is a single character. Lowercase letters are variables, `0` and
//! `1` are constants, and everything else must be listed in an
//! [`OperatorTable`] together with its arity. Because each operator knows how
//! many operands it takes, a token string determines at most one tree and no
//! brackets are ever needed.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Operators may not be nested deeper than this.
pub const MAX_DEPTH: usize = 10_000;

/// Maps single-character operator symbols to their arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorTable {
    entries: BTreeMap<char, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("operator symbol {0:?} collides with the atom, constant or whitespace classes")]
    ReservedSymbol(char),
    #[error("operator {0:?} must take at least one operand")]
    ZeroArity(char),
}

impl OperatorTable {
    /// A table with no operators at all.
    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    /// Negation `N`, implication `C`, conjunction `K` and disjunction `A`.
    pub fn standard() -> Self {
        let mut table = Self::empty();
        for (symbol, arity) in [('N', 1), ('C', 2), ('K', 2), ('A', 2)] {
            table.entries.insert(symbol, arity);
        }
        table
    }

    pub fn insert(&mut self, symbol: char, arity: usize) -> Result<(), TableError> {
        if is_atom_char(symbol) || is_const_char(symbol) || symbol.is_whitespace() {
            return Err(TableError::ReservedSymbol(symbol));
        }
        if arity == 0 {
            return Err(TableError::ZeroArity(symbol));
        }
        self.entries.insert(symbol, arity);
        Ok(())
    }

    /// Builder-style [`insert`](Self::insert).
    pub fn with(mut self, symbol: char, arity: usize) -> Result<Self, TableError> {
        self.insert(symbol, arity)?;
        Ok(self)
    }

    pub fn arity(&self, symbol: char) -> Option<usize> {
        self.entries.get(&symbol).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (char, usize)> + '_ {
        self.entries.iter().map(|(&s, &a)| (s, a))
    }
}

impl Default for OperatorTable {
    fn default() -> Self {
        Self::standard()
    }
}

fn is_atom_char(c: char) -> bool {
    c.is_ascii_lowercase()
}

fn is_const_char(c: char) -> bool {
    c == '0' || c == '1'
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Operator { symbol: char, arity: usize },
    Atom(char),
    Const(bool),
}

/// A classified character together with its zero-based character index in
/// the source string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub position: usize,
}

impl Token {
    pub fn symbol(&self) -> char {
        match self.kind {
            TokenKind::Operator { symbol, .. } => symbol,
            TokenKind::Atom(name) => name,
            TokenKind::Const(false) => '0',
            TokenKind::Const(true) => '1',
        }
    }

    /// How many operands this token still demands once read.
    fn arity(&self) -> usize {
        match self.kind {
            TokenKind::Operator { arity, .. } => arity,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    UnknownToken,
    UnexpectedEnd,
    TrailingTokens,
    TooDeep,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::UnknownToken => "unknown token",
            ParseErrorKind::UnexpectedEnd => "unexpected end of input",
            ParseErrorKind::TrailingTokens => "trailing tokens after a complete formula",
            ParseErrorKind::TooDeep => "operator nesting exceeds the depth limit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Zero-based character index; equal to the input length for
    /// [`ParseErrorKind::UnexpectedEnd`].
    pub position: usize,
}

/// A formula tree. Operator children are stored in operand order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(char),
    Const(bool),
    Op(char, Vec<Formula>),
}

/// Splits `input` into single-character tokens, skipping whitespace.
pub fn tokenize(input: &str, table: &OperatorTable) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::with_capacity(input.len());
    for (position, c) in input.chars().enumerate() {
        if c.is_whitespace() {
            continue;
        }
        let kind = if is_atom_char(c) {
            TokenKind::Atom(c)
        } else if is_const_char(c) {
            TokenKind::Const(c == '1')
        } else if let Some(arity) = table.arity(c) {
            TokenKind::Operator { symbol: c, arity }
        } else {
            return Err(ParseError {
                kind: ParseErrorKind::UnknownToken,
                position,
            });
        };
        tokens.push(Token { kind, position });
    }
    Ok(tokens)
}

fn end_position(tokens: &[Token]) -> usize {
    tokens.last().map_or(0, |t| t.position + 1)
}

/// Builds the unique tree spelled by `tokens`.
///
/// Operator arities are taken from `table`, so a token list produced under a
/// different table is re-interpreted rather than trusted. The parse is
/// iterative; nesting is bounded by [`MAX_DEPTH`].
pub fn parse(tokens: &[Token], table: &OperatorTable) -> Result<Formula, ParseError> {
    // Each frame is an operator still collecting operands.
    struct Frame {
        symbol: char,
        arity: usize,
        children: Vec<Formula>,
    }

    let mut frames: Vec<Frame> = Vec::new();
    let mut iter = tokens.iter().enumerate();

    loop {
        let Some((index, token)) = iter.next() else {
            return Err(ParseError {
                kind: ParseErrorKind::UnexpectedEnd,
                position: end_position(tokens),
            });
        };

        let mut done = match token.kind {
            TokenKind::Atom(name) => Formula::Atom(name),
            TokenKind::Const(value) => Formula::Const(value),
            TokenKind::Operator { symbol, .. } => {
                let Some(arity) = table.arity(symbol) else {
                    return Err(ParseError {
                        kind: ParseErrorKind::UnknownToken,
                        position: token.position,
                    });
                };
                if frames.len() >= MAX_DEPTH {
                    return Err(ParseError {
                        kind: ParseErrorKind::TooDeep,
                        position: token.position,
                    });
                }
                frames.push(Frame {
                    symbol,
                    arity,
                    children: Vec::with_capacity(arity),
                });
                continue;
            }
        };

        // Hand the finished subtree upwards, closing every frame it completes.
        loop {
            match frames.last_mut() {
                None => {
                    return match tokens.get(index + 1) {
                        None => Ok(done),
                        Some(extra) => Err(ParseError {
                            kind: ParseErrorKind::TrailingTokens,
                            position: extra.position,
                        }),
                    };
                }
                Some(top) => {
                    top.children.push(done);
                    if top.children.len() < top.arity {
                        break;
                    }
                    let frame = frames.pop().expect("frame present");
                    done = Formula::Op(frame.symbol, frame.children);
                }
            }
        }
    }
}

/// Convenience wrapper around [`tokenize`] followed by [`parse`].
pub fn parse_str(input: &str, table: &OperatorTable) -> Result<Formula, ParseError> {
    let tokens = tokenize(input, table)?;
    parse(&tokens, table).map_err(|mut err| {
        if err.kind == ParseErrorKind::UnexpectedEnd {
            err.position = input.chars().count();
        }
        err
    })
}

/// Outcome of the arity-counter check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WellFormedness {
    Valid,
    Invalid { position: usize },
}

impl WellFormedness {
    pub fn is_valid(self) -> bool {
        self == WellFormedness::Valid
    }
}

/// Single left-to-right pass that decides well-formedness without building a
/// tree.
///
/// `need` counts the formulas still owed: it starts at one, every token pays
/// one off and an operator of arity `k` adds `k` new debts. The string is a
/// formula iff the count first reaches zero on the last token.
pub fn is_well_formed(tokens: &[Token], table: &OperatorTable) -> WellFormedness {
    let mut need: usize = 1;
    for token in tokens {
        if need == 0 {
            return WellFormedness::Invalid {
                position: token.position,
            };
        }
        let arity = match token.kind {
            TokenKind::Operator { symbol, .. } => match table.arity(symbol) {
                Some(arity) => arity,
                None => {
                    return WellFormedness::Invalid {
                        position: token.position,
                    }
                }
            },
            _ => token.arity(),
        };
        need = need - 1 + arity;
    }
    if need == 0 {
        WellFormedness::Valid
    } else {
        WellFormedness::Invalid {
            position: end_position(tokens),
        }
    }
}

impl Formula {
    pub fn atom(name: char) -> Self {
        Formula::Atom(name)
    }

    pub fn op(symbol: char, children: impl IntoIterator<Item = Formula>) -> Self {
        Formula::Op(symbol, children.into_iter().collect())
    }

    pub fn negation(inner: Formula) -> Self {
        Formula::Op('N', vec![inner])
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Self {
        Formula::Op('C', vec![lhs, rhs])
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::Op('K', vec![lhs, rhs])
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Self {
        Formula::Op('A', vec![lhs, rhs])
    }

    /// Nodes in preorder, the order in which they are written.
    pub fn preorder(&self) -> Preorder<'_> {
        Preorder { stack: vec![self] }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        self.preorder().count()
    }

    /// Longest root-to-leaf path counted in operators; leaves have depth 0.
    pub fn depth(&self) -> usize {
        self.fold::<usize, std::convert::Infallible>(
            |_| Ok(0),
            |_, children| Ok(1 + children.iter().copied().max().unwrap_or(0)),
        )
        .unwrap_or_else(|never| match never {})
    }

    /// Bottom-up evaluation without recursion.
    ///
    /// `leaf` is called for atoms and constants; `node` receives an operator
    /// symbol with the already folded operands in order.
    pub fn fold<T, E>(
        &self,
        mut leaf: impl FnMut(&Formula) -> Result<T, E>,
        mut node: impl FnMut(char, &[T]) -> Result<T, E>,
    ) -> Result<T, E> {
        let mut pending: Vec<(&Formula, bool)> = vec![(self, false)];
        let mut values: Vec<T> = Vec::new();
        while let Some((formula, expanded)) = pending.pop() {
            match formula {
                Formula::Op(symbol, children) => {
                    if expanded {
                        let start = values.len() - children.len();
                        let value = node(*symbol, &values[start..])?;
                        values.truncate(start);
                        values.push(value);
                    } else {
                        pending.push((formula, true));
                        pending.extend(children.iter().rev().map(|c| (c, false)));
                    }
                }
                leaf_node => values.push(leaf(leaf_node)?),
            }
        }
        Ok(values.pop().expect("fold yields one value"))
    }

    /// Distinct variable names in order of first occurrence.
    pub fn free_variables(&self) -> Vec<char> {
        let mut seen = Vec::new();
        for node in self.preorder() {
            if let Formula::Atom(name) = node {
                if !seen.contains(name) {
                    seen.push(*name);
                }
            }
        }
        seen
    }

    /// Flat prefix form with no separators.
    pub fn to_polish(&self) -> String {
        self.preorder()
            .map(|node| match node {
                Formula::Atom(name) => *name,
                Formula::Const(false) => '0',
                Formula::Const(true) => '1',
                Formula::Op(symbol, _) => *symbol,
            })
            .collect()
    }

    /// Fully parenthesised infix rendering using `¬ → ∧ ∨` for `N C K A`.
    pub fn to_infix(&self) -> String {
        self.fold::<String, std::convert::Infallible>(
            |leaf| Ok(leaf.to_polish()),
            |symbol, operands| Ok(infix_node(symbol, operands)),
        )
        .unwrap_or_else(|never| match never {})
    }
}

fn glyph(symbol: char) -> char {
    match symbol {
        'N' => '¬',
        'C' => '→',
        'K' => '∧',
        'A' => '∨',
        other => other,
    }
}

fn infix_node(symbol: char, operands: &[String]) -> String {
    let g = glyph(symbol);
    match operands {
        [only] => format!("{g}{only}"),
        [lhs, rhs] => format!("({lhs} {g} {rhs})"),
        many => format!("{g}({})", many.join(", ")),
    }
}

pub struct Preorder<'a> {
    stack: Vec<&'a Formula>,
}

impl<'a> Iterator for Preorder<'a> {
    type Item = &'a Formula;

    fn next(&mut self) -> Option<&'a Formula> {
        let node = self.stack.pop()?;
        if let Formula::Op(_, children) = node {
            self.stack.extend(children.iter().rev());
        }
        Some(node)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_polish())
    }
}

// Deeply nested trees would otherwise be dropped recursively.
impl Drop for Formula {
    fn drop(&mut self) {
        let Formula::Op(_, children) = self else {
            return;
        };
        if children.iter().all(|c| !matches!(c, Formula::Op(..))) {
            return;
        }
        let mut stack = std::mem::take(children);
        while let Some(mut node) = stack.pop() {
            if let Formula::Op(_, grandchildren) = &mut node {
                stack.append(grandchildren);
            }
        }
    }
}
