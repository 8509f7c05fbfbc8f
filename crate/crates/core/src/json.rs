//! JSON schemas for posets, tableaux and multiplication tables.
//!
//! Shapes are written in column-length shorthand (`"(1,1,2)"`, `"(1^3)"`,
//! `"∅"`) and read back with [`crate::shapes::ShapeSpec::parse`], which also
//! accepts explicit box lists such as `"[0,1,3]"`. Tableau labels are keyed
//! by canonical box index (see `poset show`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{build_poset, CominusculePoset, Space};
use crate::schubert::{Convention, MultiplicationTable, Rule};
use crate::shapes::{format_shape, shape_from_str, Shape, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    pub index: usize,
    pub root_coeffs: Vec<i64>,
    pub short: bool,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub family: String,
    pub params: Vec<usize>,
    pub boxes: Vec<BoxJson>,
    /// `[lower, upper]` cover pairs.
    pub covers: Vec<[usize; 2]>,
}

impl PosetJson {
    pub fn from_poset(poset: &CominusculePoset) -> PosetJson {
        let space = poset.space();
        PosetJson {
            family: space.family_name().to_string(),
            params: space.params(),
            boxes: poset
                .boxes()
                .iter()
                .enumerate()
                .map(|(index, b)| BoxJson {
                    index,
                    root_coeffs: b.root.clone(),
                    short: b.short,
                    row: b.row,
                    col: b.col,
                })
                .collect(),
            covers: poset.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub family: String,
    pub params: Vec<usize>,
    pub inner: String,
    pub outer: String,
    pub labels: BTreeMap<usize, usize>,
}

impl TableauJson {
    pub fn from_tableau(poset: &CominusculePoset, t: &Tableau) -> TableauJson {
        let space = poset.space();
        TableauJson {
            family: space.family_name().to_string(),
            params: space.params(),
            inner: format_shape(poset, t.inner()),
            outer: format_shape(poset, t.outer()),
            labels: t.entries().into_iter().collect(),
        }
    }

    pub fn space(&self) -> Result<Space> {
        Space::from_parts(&self.family, &self.params)
    }

    /// Rebuilds the tableau on `poset`, which must be the poset named in the
    /// document. The outer shape is checked against the labelled boxes.
    pub fn to_tableau(&self, poset: &CominusculePoset) -> Result<Tableau> {
        if self.space()? != poset.space() {
            return Err(Error::Json(format!(
                "tableau is for {} but the poset is {}",
                self.space()?.name(),
                poset.space().name()
            )));
        }
        let inner = shape_from_str(poset, &self.inner)?;
        let outer = shape_from_str(poset, &self.outer)?;
        let entries: Vec<(usize, usize)> = self.labels.iter().map(|(&b, &l)| (b, l)).collect();
        let t = Tableau::new(poset, inner, &entries)?;
        if t.outer() != outer {
            return Err(Error::Tableau(format!(
                "labels fill {} but the outer shape is given as {}",
                format_shape(poset, t.outer()),
                self.outer
            )));
        }
        Ok(t)
    }

    /// Parses a document and builds both the poset and the tableau.
    pub fn load(text: &str) -> Result<(CominusculePoset, Tableau)> {
        let doc: TableauJson = serde_json::from_str(text)?;
        let poset = build_poset(doc.space()?)?;
        let t = doc.to_tableau(&poset)?;
        Ok((poset, t))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub lambda: String,
    pub mu: String,
    pub products: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub family: String,
    pub params: Vec<usize>,
    pub rule: String,
    pub convention: String,
    pub pairs: Vec<PairJson>,
}

fn convention_name(c: Convention) -> &'static str {
    match c {
        Convention::Cominuscule => "cominuscule",
        Convention::Minuscule => "minuscule",
    }
}

fn parse_convention(s: &str) -> Result<Convention> {
    match s {
        "cominuscule" => Ok(Convention::Cominuscule),
        "minuscule" => Ok(Convention::Minuscule),
        _ => Err(Error::Json(format!("unknown convention {s:?}"))),
    }
}

impl TableJson {
    pub fn from_table(poset: &CominusculePoset, t: &MultiplicationTable) -> TableJson {
        let name = |s: Shape| format_shape(poset, s);
        TableJson {
            family: t.family.clone(),
            params: t.params.clone(),
            rule: t.rule.name().to_string(),
            convention: convention_name(t.convention).to_string(),
            pairs: t
                .basis
                .iter()
                .flat_map(|&l| t.basis.iter().map(move |&m| (l, m)))
                .map(|(l, m)| PairJson {
                    lambda: name(l),
                    mu: name(m),
                    products: t.product(l, m).into_iter().map(|(nu, c)| (name(nu), c)).collect(),
                })
                .collect(),
        }
    }

    pub fn to_table(&self, poset: &CominusculePoset) -> Result<MultiplicationTable> {
        let space = Space::from_parts(&self.family, &self.params)?;
        if space != poset.space() {
            return Err(Error::Json(format!(
                "table is for {} but the poset is {}",
                space.name(),
                poset.space().name()
            )));
        }
        let mut products = BTreeMap::new();
        for pair in &self.pairs {
            let l = shape_from_str(poset, &pair.lambda)?;
            let m = shape_from_str(poset, &pair.mu)?;
            let mut row = BTreeMap::new();
            for (nu, &c) in &pair.products {
                row.insert(shape_from_str(poset, nu)?, c);
            }
            products.insert((l, m), row);
        }
        Ok(MultiplicationTable {
            family: self.family.clone(),
            params: self.params.clone(),
            rule: Rule::parse(&self.rule)?,
            convention: parse_convention(&self.convention)?,
            basis: poset.ideals(),
            products,
        })
    }
}
