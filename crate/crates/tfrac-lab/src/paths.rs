//! Motzkin, Dyck and Schroder lattice paths, height-dependent label sets,
//! step weights, and brute-force path sums.
//!
//! A Schroder path is stored as a Motzkin-shaped step list in which the
//! level steps are long (they advance the abscissa by 2); heights at
//! mid-step abscissae are derived, never stored. A long level step at even
//! height then automatically occupies an odd-numbered step, since height and
//! abscissa always have equal parity.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::symbolic::Poly;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PathKind {
    Motzkin,
    Dyck,
    Schroder,
}

impl PathKind {
    pub fn parse(s: &str) -> Option<PathKind> {
        match s {
            "motzkin" => Some(PathKind::Motzkin),
            "dyck" => Some(PathKind::Dyck),
            "schroder" => Some(PathKind::Schroder),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    Rise,
    Fall,
    /// A level step for Motzkin paths; a long level step for Schroder paths.
    Level,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Path {
    pub kind: PathKind,
    pub steps: Vec<Step>,
}

impl Path {
    pub fn new(kind: PathKind, steps: Vec<Step>) -> Self {
        let p = Path { kind, steps };
        debug_assert!(p.is_valid(), "invalid path");
        p
    }

    /// Abscissa advance of one step.
    fn step_width(&self, s: Step) -> usize {
        match (self.kind, s) {
            (PathKind::Schroder, Step::Level) => 2,
            _ => 1,
        }
    }

    /// Total abscissa length.
    pub fn length(&self) -> usize {
        self.steps.iter().map(|&s| self.step_width(s)).sum()
    }

    /// Starting height of each step.
    pub fn start_heights(&self) -> Vec<usize> {
        let mut h = 0i64;
        let mut out = Vec::with_capacity(self.steps.len());
        for &s in &self.steps {
            out.push(h as usize);
            match s {
                Step::Rise => h += 1,
                Step::Fall => h -= 1,
                Step::Level => {}
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        let mut h = 0i64;
        for &s in &self.steps {
            if self.kind == PathKind::Dyck && s == Step::Level {
                return false;
            }
            match s {
                Step::Rise => h += 1,
                Step::Fall => h -= 1,
                Step::Level => {}
            }
            if h < 0 {
                return false;
            }
        }
        h == 0
    }

    /// Two-line-per-height ASCII rendering with `/`, `\` and `_`.
    pub fn render(&self) -> String {
        let heights = self.start_heights();
        let max_h = heights
            .iter()
            .zip(&self.steps)
            .map(|(&h, &s)| if s == Step::Rise { h + 1 } else { h })
            .max()
            .unwrap_or(0);
        let width = self.length();
        let mut grid = vec![vec![' '; width]; max_h + 1];
        let mut x = 0usize;
        for (&s, &h) in self.steps.iter().zip(&heights) {
            match s {
                Step::Rise => {
                    grid[h][x] = '/';
                    x += 1;
                }
                Step::Fall => {
                    grid[h - 1][x] = '\\';
                    x += 1;
                }
                Step::Level => {
                    let w = self.step_width(s);
                    for _ in 0..w {
                        if h == 0 {
                            grid[0][x] = '_';
                        } else {
                            grid[h - 1][x] = '_';
                        }
                        x += 1;
                    }
                }
            }
        }
        let mut out = String::new();
        let mut rows: Vec<String> = grid
            .iter()
            .rev()
            .map(|row| row.iter().collect::<String>().trim_end().to_owned())
            .collect();
        while rows.first().is_some_and(|r| r.is_empty()) && rows.len() > 1 {
            rows.remove(0);
        }
        for line in rows {
            let _ = writeln!(out, "{}", line);
        }
        out
    }
}

/// Stream all paths of the given kind and abscissa length.
pub fn for_each_path(kind: PathKind, length: usize, f: &mut dyn FnMut(&Path)) {
    let mut steps = Vec::new();
    extend_path(kind, length, 0, &mut steps, f);
}

fn extend_path(
    kind: PathKind,
    remaining: usize,
    height: usize,
    steps: &mut Vec<Step>,
    f: &mut dyn FnMut(&Path),
) {
    if remaining == 0 {
        if height == 0 {
            f(&Path {
                kind,
                steps: steps.clone(),
            });
        }
        return;
    }
    // prune: not enough abscissa left to descend to zero
    if height > remaining {
        return;
    }
    steps.push(Step::Rise);
    extend_path(kind, remaining - 1, height + 1, steps, f);
    steps.pop();
    if height > 0 {
        steps.push(Step::Fall);
        extend_path(kind, remaining - 1, height - 1, steps, f);
        steps.pop();
    }
    let level_width = match kind {
        PathKind::Motzkin => Some(1),
        PathKind::Dyck => None,
        PathKind::Schroder => Some(2),
    };
    if let Some(w) = level_width {
        if remaining >= w {
            steps.push(Step::Level);
            extend_path(kind, remaining - w, height, steps, f);
            steps.pop();
        }
    }
}

pub fn enumerate_paths(kind: PathKind, length: usize) -> Vec<Path> {
    let mut out = Vec::new();
    for_each_path(kind, length, &mut |p| out.push(p.clone()));
    out
}

/// A step label: a small integer, or an integer pair for typed level steps.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Label {
    Int(usize),
    Pair(usize, usize),
}

/// Height-dependent finite label sets per step kind; an empty set forbids
/// the step at that height.
#[derive(Clone)]
pub struct LabelSets {
    pub rise: Arc<dyn Fn(usize) -> Vec<Label> + Send + Sync>,
    pub fall: Arc<dyn Fn(usize) -> Vec<Label> + Send + Sync>,
    pub level: Arc<dyn Fn(usize) -> Vec<Label> + Send + Sync>,
}

fn ints(range: std::ops::RangeInclusive<usize>) -> Vec<Label> {
    range.map(Label::Int).collect()
}

impl LabelSets {
    /// Every step has the single label 0.
    pub fn singleton() -> Self {
        let one: Arc<dyn Fn(usize) -> Vec<Label> + Send + Sync> = Arc::new(|_| vec![Label::Int(0)]);
        LabelSets {
            rise: one.clone(),
            fall: one.clone(),
            level: one,
        }
    }

    /// The Motzkin label sets of the restricted-ternary bijection:
    /// rises and falls take 0..=h, level steps take {1,2,3} x 0..=h.
    pub fn motzkin_rt() -> Self {
        LabelSets {
            rise: Arc::new(|h| ints(0..=h)),
            fall: Arc::new(|h| ints(0..=h)),
            level: Arc::new(|h| {
                let mut out = Vec::with_capacity(3 * (h + 1));
                for ty in 1..=3 {
                    for xi in 0..=h {
                        out.push(Label::Pair(ty, xi));
                    }
                }
                out
            }),
        }
    }

    /// The Schroder label sets of the interval-labeled bijection: {0} at
    /// even heights, 0..=floor(h/2) at odd heights, for all step kinds.
    pub fn schroder_irt() -> Self {
        let by_height: Arc<dyn Fn(usize) -> Vec<Label> + Send + Sync> = Arc::new(|h| {
            if h.is_multiple_of(2) {
                vec![Label::Int(0)]
            } else {
                ints(0..=h / 2)
            }
        });
        LabelSets {
            rise: by_height.clone(),
            fall: by_height.clone(),
            level: by_height,
        }
    }

    pub fn sets_for(&self, step: Step, height: usize) -> Vec<Label> {
        match step {
            Step::Rise => (self.rise)(height),
            Step::Fall => (self.fall)(height),
            Step::Level => (self.level)(height),
        }
    }
}

/// A path together with one label per step.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabeledPath {
    pub path: Path,
    pub labels: Vec<Label>,
}

impl LabeledPath {
    /// Membership in the labeled-path family defined by the label sets.
    pub fn is_admissible(&self, ls: &LabelSets) -> bool {
        let heights = self.path.start_heights();
        self.path.steps.len() == self.labels.len()
            && self
                .path
                .steps
                .iter()
                .zip(heights.iter())
                .zip(self.labels.iter())
                .all(|((&s, &h), l)| ls.sets_for(s, h).contains(l))
    }
}

/// All admissible label sequences of a path (Cartesian product of the
/// per-step sets; empty if any step's set is empty).
pub fn enumerate_labelings(path: &Path, ls: &LabelSets) -> Vec<Vec<Label>> {
    let heights = path.start_heights();
    let mut out: Vec<Vec<Label>> = vec![Vec::new()];
    for (&s, &h) in path.steps.iter().zip(&heights) {
        let choices = ls.sets_for(s, h);
        if choices.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for prefix in &out {
            for &c in &choices {
                let mut seq = prefix.clone();
                seq.push(c);
                next.push(seq);
            }
        }
        out = next;
    }
    out
}

/// Weights per (step kind, starting height, label).
#[derive(Clone)]
pub struct StepWeightScheme {
    pub rise: Arc<dyn Fn(usize, Label) -> Poly + Send + Sync>,
    pub fall: Arc<dyn Fn(usize, Label) -> Poly + Send + Sync>,
    pub level: Arc<dyn Fn(usize, Label) -> Poly + Send + Sync>,
}

impl StepWeightScheme {
    pub fn unit() -> Self {
        let one: Arc<dyn Fn(usize, Label) -> Poly + Send + Sync> = Arc::new(|_, _| Poly::one());
        StepWeightScheme {
            rise: one.clone(),
            fall: one.clone(),
            level: one,
        }
    }

    /// Label-independent height weights a_h, b_h, c_h.
    pub fn from_heights(
        a: impl Fn(usize) -> Poly + Send + Sync + 'static,
        b: impl Fn(usize) -> Poly + Send + Sync + 'static,
        c: impl Fn(usize) -> Poly + Send + Sync + 'static,
    ) -> Self {
        StepWeightScheme {
            rise: Arc::new(move |h, _| a(h)),
            fall: Arc::new(move |h, _| b(h)),
            level: Arc::new(move |h, _| c(h)),
        }
    }

    pub fn weight_of(&self, step: Step, height: usize, label: Label) -> Poly {
        match step {
            Step::Rise => (self.rise)(height, label),
            Step::Fall => (self.fall)(height, label),
            Step::Level => (self.level)(height, label),
        }
    }

    /// Product of the step weights of a labeled path.
    pub fn path_weight(&self, lp: &LabeledPath) -> Poly {
        let heights = lp.path.start_heights();
        let mut prod = Poly::one();
        for ((&s, &h), &l) in lp.path.steps.iter().zip(&heights).zip(&lp.labels) {
            prod = &prod * &self.weight_of(s, h, l);
        }
        prod
    }
}

/// Brute-force path sum: total weight of all labeled paths whose t-order is
/// `n` (length n for Motzkin, 2n for Dyck and Schroder). Equals the t^n
/// coefficient of the matching continued fraction.
pub fn flajolet_sum(kind: PathKind, n: usize, scheme: &StepWeightScheme, ls: &LabelSets) -> Poly {
    let length = match kind {
        PathKind::Motzkin => n,
        PathKind::Dyck | PathKind::Schroder => 2 * n,
    };
    let mut total = Poly::zero();
    for_each_path(kind, length, &mut |p| {
        for labels in enumerate_labelings(p, ls) {
            let lp = LabeledPath {
                path: p.clone(),
                labels,
            };
            total = &total + &scheme.path_weight(&lp);
        }
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn motzkin_length_two() {
        let paths = enumerate_paths(PathKind::Motzkin, 2);
        assert_eq!(paths.len(), 2); // rise-fall and level-level
    }

    #[test]
    fn schroder_length_two() {
        let paths = enumerate_paths(PathKind::Schroder, 2);
        assert_eq!(paths.len(), 2); // rise-fall and one long level
    }

    #[test]
    fn length_zero_is_the_empty_path() {
        for kind in [PathKind::Motzkin, PathKind::Dyck, PathKind::Schroder] {
            let paths = enumerate_paths(kind, 0);
            assert_eq!(paths.len(), 1);
            assert!(paths[0].steps.is_empty());
        }
    }

    #[test]
    fn motzkin_numbers() {
        let counts: Vec<usize> = (0..=7)
            .map(|n| enumerate_paths(PathKind::Motzkin, n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 21, 51, 127]);
    }

    #[test]
    fn catalan_numbers() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_paths(PathKind::Dyck, 2 * n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn schroder_numbers() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_paths(PathKind::Schroder, 2 * n).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 6, 22, 90, 394]);
    }

    #[test]
    fn singleton_labelings() {
        let p = Path::new(PathKind::Motzkin, vec![Step::Rise, Step::Level, Step::Fall]);
        assert_eq!(enumerate_labelings(&p, &LabelSets::singleton()).len(), 1);
    }

    #[test]
    fn rt_label_sets_on_rise_fall() {
        // |A_0| = 1, |B_1| = 2 so the path has 2 labelings
        let p = Path::new(PathKind::Motzkin, vec![Step::Rise, Step::Fall]);
        assert_eq!(enumerate_labelings(&p, &LabelSets::motzkin_rt()).len(), 2);
    }

    #[test]
    fn irt_label_sets_on_rise_fall() {
        // both sets are singletons at heights 0 and 1
        let p = Path::new(PathKind::Schroder, vec![Step::Rise, Step::Fall]);
        assert_eq!(enumerate_labelings(&p, &LabelSets::schroder_irt()).len(), 1);
    }

    #[test]
    fn flajolet_unit_weights() {
        let scheme = StepWeightScheme::unit();
        let ls = LabelSets::singleton();
        assert_eq!(
            flajolet_sum(PathKind::Motzkin, 4, &scheme, &ls),
            Poly::constant(9)
        );
        assert_eq!(
            flajolet_sum(PathKind::Schroder, 2, &scheme, &ls),
            Poly::constant(6)
        );
    }

    #[test]
    fn flajolet_zero_rise_weight() {
        // only the all-level path survives
        let scheme =
            StepWeightScheme::from_heights(|_| Poly::zero(), |_| Poly::one(), |_| Poly::v("c"));
        let ls = LabelSets::singleton();
        let total = flajolet_sum(PathKind::Motzkin, 3, &scheme, &ls);
        assert_eq!(total, Poly::v("c").pow(3));
    }

    #[test]
    fn render_shapes() {
        let p = Path::new(
            PathKind::Schroder,
            vec![Step::Level, Step::Rise, Step::Rise, Step::Fall, Step::Fall],
        );
        let art = p.render();
        assert_eq!(art, "   /\\\n__/  \\\n");
    }
}
