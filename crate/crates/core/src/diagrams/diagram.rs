use std::fmt;

use crate::error::{Error, Result};

/// Which diagram category a diagram belongs to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Flavor {
    /// Planar, unoriented.
    Tl,
    /// Planar, oriented by words in X and Y.
    Otl,
    /// Oriented, crossings allowed.
    Brauer,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Tl => "tl",
            Flavor::Otl => "otl",
            Flavor::Brauer => "brauer",
        }
    }

    pub fn is_planar(self) -> bool {
        !matches!(self, Flavor::Brauer)
    }

    pub fn is_oriented(self) -> bool {
        !matches!(self, Flavor::Tl)
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Flavor> {
        match s {
            "tl" => Ok(Flavor::Tl),
            "otl" => Ok(Flavor::Otl),
            "brauer" => Ok(Flavor::Brauer),
            _ => Err(Error::Parse(format!("unknown flavor `{s}`"))),
        }
    }
}

/// Boundary letter. `Plain` is used by the unoriented flavor; X points up,
/// Y points down.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    Plain,
    X,
    Y,
}

impl Letter {
    /// X and Y exchanged; plain points are self-dual.
    pub fn dual(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
            Letter::Plain => Letter::Plain,
        }
    }
}

pub type Word = Vec<Letter>;

/// Parses a word such as `XYYX`. Whitespace and `.` are ignored.
pub fn parse_word(s: &str) -> Result<Word> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '.')
        .map(|c| match c {
            'X' | 'x' => Ok(Letter::X),
            'Y' | 'y' => Ok(Letter::Y),
            _ => Err(Error::Parse(format!("bad letter `{c}` in word `{s}`"))),
        })
        .collect()
}

pub fn word_string(w: &[Letter]) -> String {
    w.iter()
        .map(|l| match l {
            Letter::Plain => '|',
            Letter::X => 'X',
            Letter::Y => 'Y',
        })
        .collect()
}

pub fn plain_word(n: usize) -> Word {
    vec![Letter::Plain; n]
}

/// Type of a single arc. Caps join two bottom points, cups two top points.
/// For oriented flavors the sign records the letter at the left endpoint:
/// `Plus` means the left endpoint is Y (a cap killing Y⊗X or a cup creating
/// Y⊗X).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ArcKind {
    Through,
    Cap(Sign),
    Cup(Sign),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
    /// Unoriented flavor.
    None,
}

/// A basis diagram. Points are numbered bottom left to right `0..n`, then
/// top left to right `n..n+m`. Arcs are stored with `p < q`, sorted; the
/// derived order is therefore lexicographic on the arc list within a shape.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Diagram {
    flavor: Flavor,
    bottom: Word,
    top: Word,
    arcs: Vec<(usize, usize)>,
}

impl Diagram {
    /// Validates and canonicalizes a matching.
    pub fn new(flavor: Flavor, bottom: Word, top: Word, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Diagram> {
        let n = bottom.len();
        let total = n + top.len();
        let mut seen = vec![false; total];
        let mut arcs = Vec::with_capacity(total / 2);
        for (a, b) in pairs {
            let (p, q) = if a < b { (a, b) } else { (b, a) };
            if q >= total || p == q {
                return Err(Error::InvalidDiagram(format!("bad arc ({a},{b}) on {total} points")));
            }
            if seen[p] || seen[q] {
                return Err(Error::InvalidDiagram(format!("point used twice in arc ({a},{b})")));
            }
            seen[p] = true;
            seen[q] = true;
            arcs.push((p, q));
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDiagram("matching is not perfect".into()));
        }
        arcs.sort_unstable();
        let d = Diagram { flavor, bottom, top, arcs };
        d.validate()?;
        Ok(d)
    }

    /// Builds without validation; callers guarantee a canonical valid input.
    pub(crate) fn from_sorted_unchecked(flavor: Flavor, bottom: Word, top: Word, arcs: Vec<(usize, usize)>) -> Diagram {
        let d = Diagram { flavor, bottom, top, arcs };
        debug_assert!(d.validate().is_ok(), "invalid diagram {d:?}");
        debug_assert!(d.arcs.windows(2).all(|w| w[0] < w[1]));
        d
    }

    fn validate(&self) -> Result<()> {
        let oriented = self.flavor.is_oriented();
        for &l in self.bottom.iter().chain(&self.top) {
            if oriented == (l == Letter::Plain) {
                return Err(Error::InvalidDiagram(format!("letter {l:?} not allowed in flavor {}", self.flavor.name())));
            }
        }
        if oriented {
            for &(p, q) in &self.arcs {
                let (lp, lq) = (self.letter(p), self.letter(q));
                let through = (p < self.n()) != (q < self.n());
                if through != (lp == lq) {
                    return Err(Error::InvalidDiagram(format!("arc ({p},{q}) breaks orientation")));
                }
            }
        }
        if self.flavor.is_planar() && !self.is_planar() {
            return Err(Error::InvalidDiagram("arcs cross".into()));
        }
        Ok(())
    }

    /// Position of a point on the boundary circle: bottom left to right,
    /// then top right to left.
    fn cyclic(&self, p: usize) -> usize {
        let n = self.n();
        if p < n {
            p
        } else {
            n + (self.m() - 1 - (p - n))
        }
    }

    pub fn is_planar(&self) -> bool {
        let total = self.n() + self.m();
        let mut partner_c = vec![0; total];
        for &(p, q) in &self.arcs {
            let (a, b) = (self.cyclic(p), self.cyclic(q));
            partner_c[a] = b;
            partner_c[b] = a;
        }
        let mut stack = Vec::new();
        for (pos, &other) in partner_c.iter().enumerate() {
            if other > pos {
                stack.push(pos);
            } else if stack.pop() != Some(other) {
                return false;
            }
        }
        true
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn bottom(&self) -> &[Letter] {
        &self.bottom
    }

    pub fn top(&self) -> &[Letter] {
        &self.top
    }

    /// Number of bottom points.
    pub fn n(&self) -> usize {
        self.bottom.len()
    }

    /// Number of top points.
    pub fn m(&self) -> usize {
        self.top.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn letter(&self, p: usize) -> Letter {
        if p < self.n() {
            self.bottom[p]
        } else {
            self.top[p - self.n()]
        }
    }

    pub fn partners(&self) -> Vec<usize> {
        let mut out = vec![0; self.n() + self.m()];
        for &(p, q) in &self.arcs {
            out[p] = q;
            out[q] = p;
        }
        out
    }

    pub fn arc_kind(&self, arc: (usize, usize)) -> ArcKind {
        let (p, q) = arc;
        let n = self.n();
        let sign = || match self.letter(p) {
            Letter::Plain => Sign::None,
            Letter::Y => Sign::Plus,
            Letter::X => Sign::Minus,
        };
        match (p < n, q < n) {
            (true, true) => ArcKind::Cap(sign()),
            (false, false) => ArcKind::Cup(sign()),
            _ => ArcKind::Through,
        }
    }

    pub fn caps(&self) -> usize {
        self.arcs.iter().filter(|&&(_, q)| q < self.n()).count()
    }

    pub fn cups(&self) -> usize {
        self.arcs.iter().filter(|&&(p, _)| p >= self.n()).count()
    }

    /// Number of caps plus cups.
    pub fn turnbacks(&self) -> usize {
        self.arcs.len() - self.through_count()
    }

    pub fn through_count(&self) -> usize {
        self.arcs.iter().filter(|&&(p, q)| p < self.n() && q >= self.n()).count()
    }

    /// Counts of (r+, r-, s+, s-) arcs.
    pub fn signed_counts(&self) -> [usize; 4] {
        let mut c = [0; 4];
        for &a in &self.arcs {
            match self.arc_kind(a) {
                ArcKind::Cap(Sign::Plus) => c[0] += 1,
                ArcKind::Cap(Sign::Minus) => c[1] += 1,
                ArcKind::Cup(Sign::Plus) => c[2] += 1,
                ArcKind::Cup(Sign::Minus) => c[3] += 1,
                _ => {}
            }
        }
        c
    }

    pub fn is_identity(&self) -> bool {
        self.bottom == self.top && self.arcs.iter().all(|&(p, q)| q == p + self.n())
    }

    pub fn identity(flavor: Flavor, word: Word) -> Result<Diagram> {
        let n = word.len();
        Diagram::new(flavor, word.clone(), word, (0..n).map(|i| (i, i + n)))
    }

    /// The TL generator e_i (1-based) on `n` plain strands.
    pub fn tl_generator(n: usize, i: usize) -> Result<Diagram> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, limit: n.saturating_sub(1) });
        }
        let mut pairs = vec![(i - 1, i), (n + i - 1, n + i)];
        pairs.extend((0..n).filter(|&k| k != i - 1 && k != i).map(|k| (k, k + n)));
        Diagram::new(Flavor::Tl, plain_word(n), plain_word(n), pairs)
    }

    /// A cap on a two-letter bottom word with empty top.
    pub fn cap(flavor: Flavor, a: Letter, b: Letter) -> Result<Diagram> {
        Diagram::new(flavor, vec![a, b], vec![], [(0, 1)])
    }

    /// A cup on a two-letter top word with empty bottom.
    pub fn cup(flavor: Flavor, a: Letter, b: Letter) -> Result<Diagram> {
        Diagram::new(flavor, vec![], vec![a, b], [(0, 1)])
    }

    /// Crossing of strands `i`, `i+1` (0-based) on a word; Brauer only.
    pub fn swap(word: &[Letter], i: usize) -> Result<Diagram> {
        let n = word.len();
        if i + 1 >= n {
            return Err(Error::IndexOutOfRange { index: i, limit: n.saturating_sub(1) });
        }
        let mut top = word.to_vec();
        top.swap(i, i + 1);
        let pairs = (0..n).map(|k| {
            let t = if k == i {
                i + 1
            } else if k == i + 1 {
                i
            } else {
                k
            };
            (k, n + t)
        });
        Diagram::new(Flavor::Brauer, word.to_vec(), top, pairs)
    }

    /// Permutation diagram sending bottom strand `k` to top position
    /// `perm[k]` (0-based); Brauer only.
    pub fn permutation(word: &[Letter], perm: &[usize]) -> Result<Diagram> {
        let n = word.len();
        if perm.len() != n {
            return Err(Error::SizeMismatch(format!("permutation of {} on word of {n}", perm.len())));
        }
        let mut top = vec![Letter::Plain; n];
        for (k, &t) in perm.iter().enumerate() {
            if t >= n {
                return Err(Error::IndexOutOfRange { index: t, limit: n });
            }
            top[t] = word[k];
        }
        Diagram::new(Flavor::Brauer, word.to_vec(), top, perm.iter().enumerate().map(|(k, &t)| (k, n + t)))
    }

    /// Vertical reflection: exchanges bottom and top, caps and cups.
    pub fn flip(&self) -> Diagram {
        let (n, m) = (self.n(), self.m());
        let map = |p: usize| if p < n { m + p } else { p - n };
        let mut arcs: Vec<_> = self
            .arcs
            .iter()
            .map(|&(p, q)| {
                let (a, b) = (map(p), map(q));
                (a.min(b), a.max(b))
            })
            .collect();
        arcs.sort_unstable();
        Diagram::from_sorted_unchecked(self.flavor, self.top.clone(), self.bottom.clone(), arcs)
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Diagram) -> Result<Diagram> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch(self.flavor.name().into(), other.flavor.name().into()));
        }
        let (n1, m1, n2) = (self.n(), self.m(), other.n());
        let map1 = |p: usize| if p < n1 { p } else { n1 + n2 + (p - n1) };
        let map2 = |p: usize| if p < n2 { n1 + p } else { n1 + n2 + m1 + (p - n2) };
        let mut arcs: Vec<_> = self
            .arcs
            .iter()
            .map(|&(p, q)| (map1(p), map1(q)))
            .chain(other.arcs.iter().map(|&(p, q)| (map2(p), map2(q))))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        arcs.sort_unstable();
        let bottom = [self.bottom.as_slice(), other.bottom.as_slice()].concat();
        let top = [self.top.as_slice(), other.top.as_slice()].concat();
        Ok(Diagram::from_sorted_unchecked(self.flavor, bottom, top, arcs))
    }

    /// 1-based boundary label used in JSON: `B3`, `T1`.
    pub fn point_label(&self, p: usize) -> String {
        if p < self.n() {
            format!("B{}", p + 1)
        } else {
            format!("T{}", p - self.n() + 1)
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.flavor == Flavor::Tl && self.is_identity() {
            return write!(f, "id{}", self.n());
        }
        if self.flavor == Flavor::Tl && self.n() == self.m() {
            // e_i style name when the diagram is a single generator
            for i in 1..self.n() {
                if Diagram::tl_generator(self.n(), i).ok().as_ref() == Some(self) {
                    return write!(f, "e{i}");
                }
            }
        }
        let arcs: Vec<String> = self.arcs.iter().map(|&(p, q)| format!("{}-{}", self.point_label(p), self.point_label(q))).collect();
        if self.flavor == Flavor::Tl {
            write!(f, "[{}->{}|{}]", self.n(), self.m(), arcs.join(" "))
        } else {
            write!(f, "[{}->{}|{}]", word_string(&self.bottom), word_string(&self.top), arcs.join(" "))
        }
    }
}
