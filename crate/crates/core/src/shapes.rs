//! Shapes (order ideals), skew shapes, standard tableaux and shape chains.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{CominusculePoset, MAX_BOXES};

/// A set of boxes, as a bitmask over canonical box indices.
///
/// Used both for straight shapes (order ideals) and for arbitrary box sets;
/// constructors that promise an ideal validate it against a poset.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(u32);

impl Shape {
    pub const EMPTY: Shape = Shape(0);

    pub fn full(n: usize) -> Shape {
        if n >= 32 {
            Shape(u32::MAX)
        } else {
            Shape((1u32 << n) - 1)
        }
    }

    pub fn from_bits(bits: u32) -> Shape {
        Shape(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, b: usize) -> bool {
        self.0 >> b & 1 == 1
    }

    #[must_use]
    pub fn with(self, b: usize) -> Shape {
        Shape(self.0 | 1 << b)
    }

    #[must_use]
    pub fn without(self, b: usize) -> Shape {
        Shape(self.0 & !(1 << b))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Shape) -> bool {
        self.0 & !other.0 == 0
    }

    #[must_use]
    pub fn union(self, other: Shape) -> Shape {
        Shape(self.0 | other.0)
    }

    #[must_use]
    pub fn intersect(self, other: Shape) -> Shape {
        Shape(self.0 & other.0)
    }

    #[must_use]
    pub fn minus(self, other: Shape) -> Shape {
        Shape(self.0 & !other.0)
    }

    /// Smallest box index, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest box index, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Boxes in increasing canonical index.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(b)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for Shape {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Shape::EMPTY, |s, b| s.with(b))
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A skew shape `outer / inner` with `inner` contained in `outer`, both ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    pub inner: Shape,
    pub outer: Shape,
}

impl SkewShape {
    pub fn new(poset: &CominusculePoset, inner: Shape, outer: Shape) -> Result<SkewShape> {
        check_ideal(poset, inner)?;
        check_ideal(poset, outer)?;
        if !inner.is_subset(outer) {
            return Err(Error::Shape(format!("{inner:?} is not contained in {outer:?}")));
        }
        Ok(SkewShape { inner, outer })
    }

    pub fn straight(shape: Shape) -> SkewShape {
        SkewShape { inner: Shape::EMPTY, outer: shape }
    }

    pub fn boxes(&self) -> Shape {
        self.outer.minus(self.inner)
    }

    pub fn len(&self) -> usize {
        self.boxes().len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner == self.outer
    }
}

fn check_ideal(poset: &CominusculePoset, s: Shape) -> Result<()> {
    if !s.is_subset(poset.full()) {
        return Err(Error::Shape(format!("{s:?} has boxes outside the poset")));
    }
    if !poset.is_ideal(s) {
        return Err(Error::Shape(format!("{s:?} is not down-closed")));
    }
    Ok(())
}

/// Either a column-length list or an explicit list of box indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeSpec {
    Columns(Vec<usize>),
    Boxes(Vec<usize>),
}

impl ShapeSpec {
    /// Parses `"1,1,2"`, `"(1^3,2)"`, `"()"`, `"∅"` (column lengths) or
    /// `"[0,3,4]"` (box indices).
    pub fn parse(text: &str) -> Result<ShapeSpec> {
        let t = text.trim();
        let bad = || Error::Parameter(format!("cannot parse shape {text:?}"));
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(bad)?;
            let boxes = split_numbers(inner).map_err(|_| bad())?;
            return Ok(ShapeSpec::Boxes(boxes));
        }
        if t.is_empty() || t == "∅" || t == "()" || t == "0" {
            return Ok(ShapeSpec::Columns(Vec::new()));
        }
        let body = t.strip_prefix('(').map(|s| s.strip_suffix(')')).unwrap_or(Some(t)).ok_or_else(bad)?;
        let mut cols = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (len, rep) = match part.split_once('^') {
                Some((a, b)) => (a.trim(), b.trim().trim_start_matches('{').trim_end_matches('}')),
                None => (part, "1"),
            };
            let len: usize = len.parse().map_err(|_| bad())?;
            let rep: usize = rep.parse().map_err(|_| bad())?;
            cols.extend(std::iter::repeat_n(len, rep));
        }
        Ok(ShapeSpec::Columns(cols))
    }
}

fn split_numbers(s: &str) -> std::result::Result<Vec<usize>, std::num::ParseIntError> {
    s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(str::parse).collect()
}

/// Builds a straight shape from a spec, validating down-closure.
///
/// Column `c` of length `L` means the lowest `L` cells of planar column `c`.
pub fn parse_shape(poset: &CominusculePoset, spec: &ShapeSpec) -> Result<Shape> {
    let shape = match spec {
        ShapeSpec::Boxes(boxes) => {
            let mut s = Shape::EMPTY;
            for &b in boxes {
                if b >= poset.len() {
                    return Err(Error::Parameter(format!("box {b} out of range for {}", poset.space())));
                }
                s = s.with(b);
            }
            s
        }
        ShapeSpec::Columns(cols) => {
            let mut s = Shape::EMPTY;
            for (c, &len) in cols.iter().enumerate() {
                let column = poset.column(c);
                if len > column.len() {
                    return Err(Error::Parameter(format!(
                        "column {c} of {} has {} boxes, {len} requested",
                        poset.space(),
                        column.len()
                    )));
                }
                for &b in &column[..len] {
                    s = s.with(b);
                }
            }
            s
        }
    };
    check_ideal(poset, shape)?;
    Ok(shape)
}

/// Convenience: parse text and build the shape.
pub fn shape_from_str(poset: &CominusculePoset, text: &str) -> Result<Shape> {
    parse_shape(poset, &ShapeSpec::parse(text)?)
}

/// Column lengths of a box set, trailing zeros removed. Returns `None` when
/// some column is not filled from its lowest cell.
pub fn column_lengths(poset: &CominusculePoset, s: Shape) -> Option<Vec<usize>> {
    let mut cols = Vec::new();
    for c in 0..poset.num_columns() {
        let column = poset.column(c);
        let len = column.iter().take_while(|&&b| s.contains(b)).count();
        if column[len..].iter().any(|&b| s.contains(b)) {
            return None;
        }
        cols.push(len);
    }
    while cols.last() == Some(&0) {
        cols.pop();
    }
    Some(cols)
}

/// Column-length shorthand: `∅`, `(1)`, `(1^4)`, `(1,1,2,1)`.
pub fn format_shape(poset: &CominusculePoset, s: Shape) -> String {
    if s.is_empty() {
        return "∅".to_string();
    }
    match column_lengths(poset, s) {
        Some(cols) if cols.len() >= 2 && cols.iter().all(|&c| c == 1) => format!("(1^{})", cols.len()),
        Some(cols) => {
            let parts: Vec<String> = cols.iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
        None => format!("{:?}", s.to_vec()),
    }
}

/// An order-preserving bijective labeling of a skew shape by `1..=n`.
///
/// `labels[b]` is the label of box `b`, or 0 for boxes outside the skew
/// shape. Ordering and hashing compare (inner, outer, labels), so tableaux of
/// a fixed shape sort lexicographically by their label sequence read in
/// canonical box order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    inner: Shape,
    outer: Shape,
    labels: [u8; MAX_BOXES],
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<(usize, u8)> = self.skew_boxes().iter().map(|b| (b, self.labels[b])).collect();
        f.debug_struct("Tableau").field("inner", &self.inner).field("labels", &entries).finish()
    }
}

impl Tableau {
    /// The empty tableau of shape `shape / shape`.
    pub fn empty(shape: Shape) -> Tableau {
        Tableau { inner: shape, outer: shape, labels: [0; MAX_BOXES] }
    }

    /// Validating constructor from `(box, label)` pairs.
    pub fn new(poset: &CominusculePoset, inner: Shape, entries: &[(usize, usize)]) -> Result<Tableau> {
        let mut labels = [0u8; MAX_BOXES];
        let mut outer = inner;
        for &(b, l) in entries {
            if b >= poset.len() {
                return Err(Error::Tableau(format!("box {b} out of range")));
            }
            if outer.contains(b) {
                return Err(Error::Tableau(format!("box {b} labeled twice or inside the inner shape")));
            }
            if l == 0 || l > entries.len() {
                return Err(Error::Tableau(format!("label {l} out of range 1..={}", entries.len())));
            }
            outer = outer.with(b);
            labels[b] = l as u8;
        }
        let t = Tableau { inner, outer, labels };
        t.validate(poset)?;
        Ok(t)
    }

    /// Builds a tableau without validation; callers guarantee the invariants.
    pub(crate) fn from_parts(inner: Shape, outer: Shape, labels: [u8; MAX_BOXES]) -> Tableau {
        Tableau { inner, outer, labels }
    }

    /// Checks ideals, bijectivity and order preservation.
    pub fn validate(&self, poset: &CominusculePoset) -> Result<()> {
        SkewShape::new(poset, self.inner, self.outer)?;
        let skew = self.skew_boxes();
        let n = skew.len();
        let mut seen = vec![false; n + 1];
        for b in 0..MAX_BOXES {
            let l = self.labels[b] as usize;
            if skew.contains(b) {
                if l == 0 || l > n || seen[l] {
                    return Err(Error::Tableau(format!("labels are not a bijection onto 1..={n}")));
                }
                seen[l] = true;
            } else if l != 0 {
                return Err(Error::Tableau(format!("box {b} outside the skew shape carries a label")));
            }
        }
        for x in skew.iter() {
            for y in poset.upper_covers(x).intersect(skew).iter() {
                if self.labels[x] >= self.labels[y] {
                    return Err(Error::Tableau(format!("labels decrease along the cover {x} < {y}")));
                }
            }
        }
        Ok(())
    }

    pub fn inner(&self) -> Shape {
        self.inner
    }

    pub fn outer(&self) -> Shape {
        self.outer
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape { inner: self.inner, outer: self.outer }
    }

    pub fn skew_boxes(&self) -> Shape {
        self.outer.minus(self.inner)
    }

    pub fn len(&self) -> usize {
        self.skew_boxes().len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner == self.outer
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn label(&self, b: usize) -> Option<usize> {
        match self.labels[b] {
            0 => None,
            l => Some(l as usize),
        }
    }

    pub fn raw_labels(&self) -> &[u8; MAX_BOXES] {
        &self.labels
    }

    /// `result[i]` is the box carrying label `i + 1`.
    pub fn boxes_by_label(&self) -> Vec<usize> {
        let mut v = vec![0; self.len()];
        for b in self.skew_boxes().iter() {
            v[self.labels[b] as usize - 1] = b;
        }
        v
    }

    /// `(box, label)` pairs in canonical box order.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        self.skew_boxes().iter().map(|b| (b, self.labels[b] as usize)).collect()
    }

    /// The sub-tableau of labels `lo..=hi`, relabeled from 1, with inner shape
    /// the inner shape plus all boxes labeled below `lo`.
    pub fn window(&self, lo: usize, hi: usize) -> Tableau {
        let mut labels = [0u8; MAX_BOXES];
        let mut inner = self.inner;
        let mut outer = self.inner;
        for b in self.skew_boxes().iter() {
            let l = self.labels[b] as usize;
            if l < lo {
                inner = inner.with(b);
                outer = outer.with(b);
            } else if l <= hi {
                outer = outer.with(b);
                labels[b] = (l - lo + 1) as u8;
            }
        }
        Tableau { inner, outer, labels }
    }

    /// Rotates the tableau through the poset anti-automorphism: shape
    /// `outer/inner` goes to `rot(Λ∖inner) / rot(Λ∖outer)` and label `l` to
    /// `n + 1 - l`.
    pub fn rotated(&self, poset: &CominusculePoset) -> Tableau {
        let full = poset.full();
        let n = self.len() as u8;
        let mut labels = [0u8; MAX_BOXES];
        for b in self.skew_boxes().iter() {
            labels[poset.rotate(b)] = n + 1 - self.labels[b];
        }
        Tableau {
            inner: poset.rotate_set(full.minus(self.outer)),
            outer: poset.rotate_set(full.minus(self.inner)),
            labels,
        }
    }
}

/// A sequence of shapes, each one box larger than the last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShapeChain(pub Vec<Shape>);

impl ShapeChain {
    pub fn shapes(&self) -> &[Shape] {
        &self.0
    }

    pub fn first(&self) -> Shape {
        self.0[0]
    }

    pub fn last(&self) -> Shape {
        *self.0.last().expect("chains are nonempty")
    }

    pub fn steps(&self) -> usize {
        self.0.len() - 1
    }
}

pub fn chain_of(t: &Tableau) -> ShapeChain {
    let mut shapes = vec![t.inner()];
    let mut cur = t.inner();
    for b in t.boxes_by_label() {
        cur = cur.with(b);
        shapes.push(cur);
    }
    ShapeChain(shapes)
}

pub fn tableau_of(poset: &CominusculePoset, chain: &ShapeChain) -> Result<Tableau> {
    let shapes = chain.shapes();
    if shapes.is_empty() {
        return Err(Error::Chain("empty chain".into()));
    }
    check_ideal(poset, shapes[0]).map_err(|e| Error::Chain(e.to_string()))?;
    let mut labels = [0u8; MAX_BOXES];
    for (i, w) in shapes.windows(2).enumerate() {
        let added = w[1].minus(w[0]);
        if !w[0].is_subset(w[1]) || added.len() != 1 {
            return Err(Error::Chain(format!("step {} does not add exactly one box", i + 1)));
        }
        if !poset.is_ideal(w[1]) {
            return Err(Error::Chain(format!("shape {} is not down-closed", i + 1)));
        }
        labels[added.first().unwrap()] = (i + 1) as u8;
    }
    Ok(Tableau { inner: shapes[0], outer: *shapes.last().unwrap(), labels })
}

/// All standard tableaux of a skew shape, sorted lexicographically by label
/// sequence in canonical box order.
pub fn enumerate_syt(poset: &CominusculePoset, skew: SkewShape) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut labels = [0u8; MAX_BOXES];
    fn go(
        poset: &CominusculePoset,
        skew: SkewShape,
        filled: Shape,
        next: u8,
        labels: &mut [u8; MAX_BOXES],
        out: &mut Vec<Tableau>,
    ) {
        if filled == skew.outer {
            out.push(Tableau { inner: skew.inner, outer: skew.outer, labels: *labels });
            return;
        }
        let avail = poset.minimal_outside(filled).intersect(skew.outer);
        for b in avail.iter() {
            labels[b] = next;
            go(poset, skew, filled.with(b), next + 1, labels, out);
            labels[b] = 0;
        }
    }
    go(poset, skew, skew.inner, 1, &mut labels, &mut out);
    out.sort_unstable();
    out
}

/// Number of standard tableaux, without materializing them.
pub fn count_syt(poset: &CominusculePoset, skew: SkewShape) -> u64 {
    use std::collections::HashMap;
    fn go(poset: &CominusculePoset, outer: Shape, filled: Shape, memo: &mut HashMap<Shape, u64>) -> u64 {
        if filled == outer {
            return 1;
        }
        if let Some(&c) = memo.get(&filled) {
            return c;
        }
        let avail = poset.minimal_outside(filled).intersect(outer);
        let c = avail.iter().map(|b| go(poset, outer, filled.with(b), memo)).sum();
        memo.insert(filled, c);
        c
    }
    go(poset, skew.outer, skew.inner, &mut HashMap::new())
}

/// The lexicographically first standard filling: labels in canonical box order.
pub fn canonical_filling(skew: SkewShape) -> Tableau {
    let mut labels = [0u8; MAX_BOXES];
    for (i, b) in skew.boxes().iter().enumerate() {
        labels[b] = (i + 1) as u8;
    }
    Tableau { inner: skew.inner, outer: skew.outer, labels }
}

/// `mu` extends `lambda`: disjoint, and `lambda`, `lambda ∪ mu` are both ideals
/// (so `mu` is up-closed inside the union).
pub fn extends(poset: &CominusculePoset, mu: Shape, lambda: Shape) -> bool {
    mu.intersect(lambda).is_empty() && poset.is_ideal(lambda) && poset.is_ideal(lambda.union(mu))
}

/// `A ∐ T`: labels of `second` shifted by `|first|`. Requires
/// `second.inner == first.outer`.
pub fn append(first: &Tableau, second: &Tableau) -> Result<Tableau> {
    if second.inner != first.outer {
        return Err(Error::Extension(format!(
            "shape {:?} does not sit on top of {:?}",
            second.skew_boxes(),
            first.outer
        )));
    }
    let shift = first.len() as u8;
    let mut labels = first.labels;
    for b in second.skew_boxes().iter() {
        labels[b] = second.labels[b] + shift;
    }
    Ok(Tableau { inner: first.inner, outer: second.outer, labels })
}

/// `A ∐ T ∐ B`.
pub fn concat(a: &Tableau, t: &Tableau, b: &Tableau) -> Result<Tableau> {
    append(&append(a, t)?, b)
}
