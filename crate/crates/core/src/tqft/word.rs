use std::fmt;

use crate::error::WordError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Unit,
    Counit,
    Mult,
    Comult,
    Identity,
    Swap,
}

impl Generator {
    pub fn from_char(c: char) -> Option<Self> {
        Some(match c {
            'u' => Generator::Unit,
            'c' => Generator::Counit,
            'm' => Generator::Mult,
            'd' => Generator::Comult,
            'i' => Generator::Identity,
            's' => Generator::Swap,
            _ => return None,
        })
    }

    pub fn symbol(self) -> char {
        match self {
            Generator::Unit => 'u',
            Generator::Counit => 'c',
            Generator::Mult => 'm',
            Generator::Comult => 'd',
            Generator::Identity => 'i',
            Generator::Swap => 's',
        }
    }

    pub fn inputs(self) -> usize {
        match self {
            Generator::Unit => 0,
            Generator::Counit | Generator::Comult | Generator::Identity => 1,
            Generator::Mult | Generator::Swap => 2,
        }
    }

    pub fn outputs(self) -> usize {
        match self {
            Generator::Counit => 0,
            Generator::Unit | Generator::Mult | Generator::Identity => 1,
            Generator::Comult | Generator::Swap => 2,
        }
    }
}

/// Generators placed side by side, leftmost on the leading tensor factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slice {
    pub generators: Vec<Generator>,
}

impl Slice {
    pub fn in_strands(&self) -> usize {
        self.generators.iter().map(|g| g.inputs()).sum()
    }

    pub fn out_strands(&self) -> usize {
        self.generators.iter().map(|g| g.outputs()).sum()
    }
}

/// Slices in the order they are applied; consecutive strand counts agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramWord {
    slices: Vec<Slice>,
}

impl DiagramWord {
    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn in_strands(&self) -> usize {
        self.slices[0].in_strands()
    }

    pub fn out_strands(&self) -> usize {
        self.slices[self.slices.len() - 1].out_strands()
    }
}

impl fmt::Display for DiagramWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, slice) in self.slices.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            for (j, g) in slice.generators.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", g.symbol())?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for DiagramWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// `word := slice ('|' slice)*`, `slice := gen+`, `gen := u|c|m|d|i|s`, with
/// optional whitespace between tokens. Positions are byte offsets.
pub fn parse_word(text: &str) -> Result<DiagramWord, WordError> {
    let mut slices = Vec::new();
    let mut current = Vec::new();
    let mut slice_start = 0;
    for (pos, ch) in text.char_indices() {
        if ch.is_whitespace() {
            continue;
        }
        if ch == '|' {
            if current.is_empty() {
                return Err(empty_slice(slice_start, pos));
            }
            slices.push(Slice { generators: std::mem::take(&mut current) });
            slice_start = pos + 1;
            continue;
        }
        match Generator::from_char(ch) {
            Some(g) => current.push(g),
            None => {
                return Err(WordError::Syntax {
                    position: pos,
                    message: format!("unexpected {ch:?}; expected one of u c m d i s or '|'"),
                })
            }
        }
    }
    if current.is_empty() {
        return Err(empty_slice(slice_start, text.len()));
    }
    slices.push(Slice { generators: current });

    for (k, pair) in slices.windows(2).enumerate() {
        let (expected, actual) = (pair[1].in_strands(), pair[0].out_strands());
        if expected != actual {
            return Err(WordError::StrandMismatch { slice: k + 2, expected, actual });
        }
    }
    Ok(DiagramWord { slices })
}

fn empty_slice(start: usize, pos: usize) -> WordError {
    WordError::Syntax {
        position: pos,
        message: format!("empty slice starting at byte {start}"),
    }
}
