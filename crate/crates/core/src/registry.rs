//! Named verification strategies. Each [`Checker`] takes typed documents
//! and returns a [`Report`]; the CLI `check` verb dispatches by name.

use std::collections::BTreeMap;

use crate::algebra::{is_alternative, is_pre_alternative};
use crate::bimodule::bimodule_report;
use crate::complements::deformation_report;
use crate::error::{ensure_field, Error, Result};
use crate::flag::{check_flag, check_pre_flag};
use crate::io::Document;
use crate::pre_unified::check_pre_datum;
use crate::products::{check_crossed, check_matched};
use crate::report::Report;
use crate::unified::check_datum;

pub trait Checker: Send + Sync {
    fn name(&self) -> &'static str;
    /// Expected document schemas, in argument order.
    fn inputs(&self) -> &'static [&'static str];
    fn run(&self, docs: Vec<Document>) -> Result<Report>;
}

/// A checker backed by a plain function.
pub struct FnChecker {
    pub name: &'static str,
    pub inputs: &'static [&'static str],
    pub run: fn(Vec<Document>) -> Result<Report>,
}

impl Checker for FnChecker {
    fn name(&self) -> &'static str {
        self.name
    }

    fn inputs(&self) -> &'static [&'static str] {
        self.inputs
    }

    fn run(&self, docs: Vec<Document>) -> Result<Report> {
        (self.run)(docs)
    }
}

fn one(docs: Vec<Document>) -> Document {
    docs.into_iter().next().expect("arity checked by the registry")
}

const STANDARD: &[FnChecker] = &[
    FnChecker {
        name: "alternative",
        inputs: &["algebra"],
        run: |d| Ok(Report::new("alternative", is_alternative(&one(d).into_algebra()?), Vec::new())),
    },
    FnChecker {
        name: "prealternative",
        inputs: &["prealgebra"],
        run: |d| Ok(Report::new("prealternative", is_pre_alternative(&one(d).into_prealgebra()?), Vec::new())),
    },
    FnChecker { name: "bimodule", inputs: &["datum"], run: |d| Ok(bimodule_report(&one(d).into_datum()?.bimodule())) },
    FnChecker { name: "datum", inputs: &["datum"], run: |d| Ok(check_datum(&one(d).into_datum()?)) },
    FnChecker { name: "predatum", inputs: &["predatum"], run: |d| Ok(check_pre_datum(&one(d).into_predatum()?)) },
    FnChecker { name: "matched", inputs: &["matchedpair"], run: |d| Ok(check_matched(&one(d).into_matched_pair()?)) },
    FnChecker { name: "crossed", inputs: &["crossed"], run: |d| Ok(check_crossed(&one(d).into_crossed()?)) },
    FnChecker {
        name: "deformation",
        inputs: &["matchedpair", "linmap"],
        run: |d| {
            let mut it = d.into_iter();
            let mp = it.next().expect("arity").into_matched_pair()?;
            let r = it.next().expect("arity").into_linmap()?;
            deformation_report(&mp, &r)
        },
    },
    FnChecker { name: "flag", inputs: &["flag"], run: |d| Ok(check_flag(&one(d).into_flag()?)) },
    FnChecker { name: "preflag", inputs: &["preflag"], run: |d| Ok(check_pre_flag(&one(d).into_preflag()?)) },
];

#[derive(Default)]
pub struct Registry {
    checkers: BTreeMap<&'static str, Box<dyn Checker>>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every built-in checker.
    pub fn standard() -> Self {
        let mut r = Self::new();
        for c in STANDARD {
            r.register(Box::new(FnChecker { name: c.name, inputs: c.inputs, run: c.run }));
        }
        r
    }

    /// Replaces any checker already registered under the same name.
    pub fn register(&mut self, checker: Box<dyn Checker>) {
        self.checkers.insert(checker.name(), checker);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Checker> {
        self.checkers.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checkers.keys().copied()
    }

    /// Runs a checker after validating arity, schemas and a common field.
    pub fn run(&self, name: &str, docs: Vec<Document>) -> Result<Report> {
        let c = self.get(name).ok_or_else(|| Error::schema("checker", format!("unknown checker {name:?}")))?;
        let want = c.inputs();
        if docs.len() != want.len() {
            return Err(Error::schema(
                "inputs",
                format!("{name} takes {} document(s), got {}", want.len(), docs.len()),
            ));
        }
        for (i, (doc, schema)) in docs.iter().zip(want).enumerate() {
            if doc.schema() != *schema {
                return Err(Error::schema(
                    format!("inputs[{i}].schema"),
                    format!("expected {schema:?}, found {:?}", doc.schema()),
                ));
            }
        }
        if let Some(first) = docs.first() {
            for doc in &docs[1..] {
                ensure_field(first.field(), doc.field())?;
            }
        }
        c.run(docs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::{octonions, sedenions};
    use crate::field::Field;
    use crate::library;
    use crate::linear::LinearMap;
    use crate::products::MatchedPair;

    #[test]
    fn standard_names() {
        let names: Vec<_> = Registry::standard().names().collect();
        assert_eq!(
            names,
            [
                "alternative",
                "bimodule",
                "crossed",
                "datum",
                "deformation",
                "flag",
                "matched",
                "prealternative",
                "predatum",
                "preflag"
            ]
        );
    }

    #[test]
    fn dispatch_and_validation() {
        let f = Field::Prime(5);
        let reg = Registry::standard();
        assert!(reg.run("alternative", vec![Document::Algebra(octonions(f))]).unwrap().is_pass());
        assert!(!reg.run("alternative", vec![Document::Algebra(sedenions(f))]).unwrap().is_pass());
        assert!(matches!(reg.run("datum", vec![Document::Algebra(octonions(f))]), Err(Error::Schema { .. })));
        assert!(matches!(reg.run("nope", vec![]), Err(Error::Schema { .. })));
        let g = library::ground(f);
        let mp = MatchedPair::zero(g.clone(), library::ground(f));
        let r = LinearMap::zero(Field::Prime(7), mp.b.space(), mp.a.space());
        let docs = vec![Document::MatchedPair(mp), Document::LinMap(r)];
        assert!(matches!(reg.run("deformation", docs), Err(Error::FieldMismatch { .. })));
    }
}
