use super::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Line {
    Identity,
    Gen(usize),
    Mul(usize, usize),
    Inv(usize),
}

/// A word in the generators of a group, stored as a straight-line program.
///
/// Line `i` is the identity, a generator, a product of two earlier lines or
/// the inverse of an earlier line; the value of the word is the last line.
#[derive(Debug, Clone, Default)]
pub struct Word {
    pub(crate) lines: Vec<Line>,
}

impl Word {
    pub(crate) fn push(&mut self, line: Line) -> usize {
        self.lines.push(line);
        self.lines.len() - 1
    }

    /// A plain word `g_{i₁} g_{i₂} ⋯` in generator indices.
    pub fn from_generator_indices(indices: &[usize]) -> Word {
        let mut w = Word::default();
        let mut acc = w.push(Line::Identity);
        for &i in indices {
            let g = w.push(Line::Gen(i));
            acc = w.push(Line::Mul(acc, g));
        }
        w
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Evaluates the word on concrete generators.
    pub fn evaluate(&self, generators: &[Permutation], degree: usize) -> Permutation {
        let mut values: Vec<Permutation> = Vec::with_capacity(self.lines.len());
        for line in &self.lines {
            let v = match *line {
                Line::Identity => Permutation::identity(degree),
                Line::Gen(i) => generators[i].clone(),
                Line::Mul(a, b) => values[a].mul(&values[b]),
                Line::Inv(a) => values[a].inverse(),
            };
            values.push(v);
        }
        values
            .pop()
            .unwrap_or_else(|| Permutation::identity(degree))
    }
}
