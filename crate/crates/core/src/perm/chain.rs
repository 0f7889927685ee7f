//! Deterministic Schreier–Sims.

use super::slp::{Line, Word};
use super::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// `slot[pt]` indexes `transversal` for points in the orbit.
    slot: Vec<u32>,
    transversal: Vec<Permutation>,
    inverse: Vec<Permutation>,
    lines: Vec<usize>,
    /// Schreier generators `(orbit index, generator index)` already sifted,
    /// counted in row-major order.
    checked: usize,
}

const NONE: u32 = u32::MAX;

/// A base and strong generating set with explicit transversals.
#[derive(Debug, Clone)]
pub(crate) struct Chain {
    degree: usize,
    strong: Vec<Permutation>,
    strong_lines: Vec<usize>,
    levels: Vec<Level>,
    slp: Option<Word>,
}

struct Sifted {
    residue: Permutation,
    level: usize,
    path: Vec<(usize, usize)>,
}

impl Chain {
    pub(crate) fn new(degree: usize, gens: &[Permutation], witness: bool) -> Chain {
        let mut chain = Chain {
            degree,
            strong: Vec::new(),
            strong_lines: Vec::new(),
            levels: Vec::new(),
            slp: witness.then(Word::default),
        };
        for (i, g) in gens.iter().enumerate() {
            chain.add_indexed_generator(g, i);
        }
        chain
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub(crate) fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub(crate) fn level_count(&self) -> usize {
        self.levels.len()
    }

    pub(crate) fn orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// Transversal element `u` with `base^u = point` at the given level.
    pub(crate) fn transversal(&self, level: usize, point: usize) -> Option<&Permutation> {
        let l = &self.levels[level];
        let s = l.slot[point];
        (s != NONE).then(|| &l.transversal[s as usize])
    }

    pub(crate) fn has_witnesses(&self) -> bool {
        self.slp.is_some()
    }

    /// Adds a generator (of the group being described) and restores the
    /// chain invariants. Returns false when `g` was already a member.
    pub(crate) fn add_generator(&mut self, g: &Permutation, line: Option<usize>) -> bool {
        if self.contains(g) {
            return false;
        }
        let j = self.insert_strong(g.clone(), line, 0);
        self.schreier_sims(j);
        true
    }

    /// Adds the generator with index `index` in the original generating
    /// list, recording it in the witness program.
    pub(crate) fn add_indexed_generator(&mut self, g: &Permutation, index: usize) -> bool {
        let line = self.slp.as_mut().map(|w| w.push(Line::Gen(index)));
        self.add_generator(g, line)
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let s = self.sift(g, 0);
        s.level == self.levels.len() && s.residue.is_identity()
    }

    /// A word in the original generators evaluating to `g`, when `g` is a
    /// member and witnesses are tracked.
    pub(crate) fn witness(&self, g: &Permutation) -> Option<Word> {
        let slp = self.slp.as_ref()?;
        let s = self.sift(g, 0);
        if s.level != self.levels.len() || !s.residue.is_identity() {
            return None;
        }
        // g = u_m ⋯ u_1 u_0 for the transversal elements met while sifting.
        let mut word = slp.clone();
        let mut acc = word.push(Line::Identity);
        for &(level, slot) in s.path.iter().rev() {
            let l = self.levels[level].lines[slot];
            acc = word.push(Line::Mul(acc, l));
        }
        let _ = acc;
        Some(word)
    }

    fn sift(&self, g: &Permutation, from: usize) -> Sifted {
        let mut h = g.clone();
        let mut path = Vec::new();
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            let pt = h.image(level.base);
            let s = level.slot[pt];
            if s == NONE {
                return Sifted {
                    residue: h,
                    level: idx,
                    path,
                };
            }
            h = h.mul(&level.inverse[s as usize]);
            path.push((idx, s as usize));
        }
        Sifted {
            residue: h,
            level: self.levels.len(),
            path,
        }
    }

    /// Registers `h` as a strong generator on every level from `from` up to
    /// the first base point it moves (creating a level if needed). Returns
    /// that level.
    fn insert_strong(&mut self, h: Permutation, line: Option<usize>, from: usize) -> usize {
        let mut j = from;
        while j < self.levels.len() && h.image(self.levels[j].base) == self.levels[j].base {
            j += 1;
        }
        if j == self.levels.len() {
            let base = (0..self.degree)
                .find(|&p| h.image(p) != p)
                .expect("identity cannot be a strong generator");
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                orbit: Vec::new(),
                slot: vec![NONE; self.degree],
                transversal: Vec::new(),
                inverse: Vec::new(),
                lines: Vec::new(),
                checked: 0,
            });
        }
        let idx = self.strong.len();
        self.strong.push(h);
        self.strong_lines.push(line.unwrap_or(usize::MAX));
        for l in from..=j {
            self.levels[l].gens.push(idx);
            self.recompute_orbit(l);
        }
        j
    }

    fn recompute_orbit(&mut self, level: usize) {
        let degree = self.degree;
        let lvl = &mut self.levels[level];
        lvl.slot.iter_mut().for_each(|s| *s = NONE);
        lvl.orbit.clear();
        lvl.transversal.clear();
        lvl.inverse.clear();
        lvl.lines.clear();
        lvl.checked = 0;
        lvl.orbit.push(lvl.base);
        lvl.slot[lvl.base] = 0;
        lvl.transversal.push(Permutation::identity(degree));
        lvl.inverse.push(Permutation::identity(degree));
        let id_line = self.slp.as_mut().map(|w| w.push(Line::Identity));
        lvl.lines.push(id_line.unwrap_or(usize::MAX));
        let mut i = 0;
        while i < lvl.orbit.len() {
            let pt = lvl.orbit[i];
            let u = lvl.transversal[i].clone();
            let u_line = lvl.lines[i];
            for &gi in &lvl.gens {
                let s = &self.strong[gi];
                let img = s.image(pt);
                if lvl.slot[img] == NONE {
                    lvl.slot[img] = lvl.orbit.len() as u32;
                    lvl.orbit.push(img);
                    let v = u.mul(s);
                    lvl.inverse.push(v.inverse());
                    lvl.transversal.push(v);
                    let line = self
                        .slp
                        .as_mut()
                        .map(|w| w.push(Line::Mul(u_line, self.strong_lines[gi])));
                    lvl.lines.push(line.unwrap_or(usize::MAX));
                }
            }
            i += 1;
        }
    }

    /// Finds a Schreier generator at `level` that does not sift through the
    /// levels below it. Returns the residue, its witness line and the level
    /// where sifting stopped.
    fn non_sifting_schreier(&mut self, level: usize) -> Option<(Permutation, Option<usize>, usize)> {
        let ngens = self.levels[level].gens.len();
        let total = self.levels[level].orbit.len() * ngens;
        while self.levels[level].checked < total {
            let c = self.levels[level].checked;
            let (oi, gi) = (c / ngens, c % ngens);
            let lvl = &self.levels[level];
            let s_idx = lvl.gens[gi];
            let s = &self.strong[s_idx];
            let pt = lvl.orbit[oi];
            let img = s.image(pt);
            let t = lvl.slot[img] as usize;
            let us = lvl.transversal[oi].mul(s);
            if us == lvl.transversal[t] {
                self.levels[level].checked += 1;
                continue;
            }
            let y = us.mul(&lvl.inverse[t]);
            let sifted = self.sift(&y, level + 1);
            if sifted.level == self.levels.len() && sifted.residue.is_identity() {
                self.levels[level].checked += 1;
                continue;
            }
            let line = self.slp.is_some().then(|| {
                let l_u = self.levels[level].lines[oi];
                let l_s = self.strong_lines[s_idx];
                let l_t = self.levels[level].lines[t];
                let slp = self.slp.as_mut().unwrap();
                let a = slp.push(Line::Mul(l_u, l_s));
                let b = slp.push(Line::Inv(l_t));
                let mut acc = slp.push(Line::Mul(a, b));
                for &(lv, sl) in &sifted.path {
                    let rep = self.levels[lv].lines[sl];
                    let slp = self.slp.as_mut().unwrap();
                    let inv = slp.push(Line::Inv(rep));
                    acc = slp.push(Line::Mul(acc, inv));
                }
                acc
            });
            return Some((sifted.residue, line, sifted.level));
        }
        None
    }

    fn schreier_sims(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let level = i as usize;
            match self.non_sifting_schreier(level) {
                None => i -= 1,
                Some((h, line, _)) => {
                    let j = self.insert_strong(h, line, level + 1);
                    i = j as isize;
                }
            }
        }
    }

    pub(crate) fn random_element<R: rand::Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let i = rng.random_range(0..level.transversal.len());
            g = g.mul(&level.transversal[i]);
        }
        g
    }
}
