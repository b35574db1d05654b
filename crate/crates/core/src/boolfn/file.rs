use super::{AnfForm, BooleanFunction, TableCap};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// On-disk JSON form of a function: `n` plus exactly one of `anf` (a list of
/// monomials, each a sorted list of variable indices) or `table_hex`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anf: Option<Vec<Vec<usize>>>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_hex: Option<String>,
}

impl FunctionFile {
    pub fn from_table(f: &BooleanFunction) -> Self {
        FunctionFile {
            anf: None,
            n: f.n(),
            table_hex: Some(f.to_hex()),
        }
    }

    pub fn from_anf(anf: &AnfForm) -> Self {
        FunctionFile {
            anf: Some(anf.monomials().map(|m| m.vars().to_vec()).collect()),
            n: anf.n(),
            table_hex: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: FunctionFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        match (&file.anf, &file.table_hex) {
            (Some(_), None) | (None, Some(_)) => Ok(file),
            _ => Err(Error::Parse(
                "function file needs exactly one of `anf` or `table_hex`".into(),
            )),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("function file serializes")
    }

    pub fn to_function(&self, cap: TableCap) -> Result<BooleanFunction> {
        match (&self.anf, &self.table_hex) {
            (Some(monomials), None) => AnfForm::from_monomials(self.n, monomials.iter().cloned())?.to_table(cap),
            (None, Some(hex)) => BooleanFunction::from_hex(self.n, cap, hex),
            _ => Err(Error::Parse(
                "function file needs exactly one of `anf` or `table_hex`".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        let cap = TableCap::default();
        let a = FunctionFile::parse(r#"{"n":3,"anf":[[0,1,2]]}"#).unwrap();
        let b = FunctionFile::parse(r#"{"n":3,"table_hex":"08"}"#).unwrap();
        assert_eq!(a.to_function(cap).unwrap(), b.to_function(cap).unwrap());
    }

    #[test]
    fn rejects_ambiguous_or_empty() {
        assert!(FunctionFile::parse(r#"{"n":3}"#).is_err());
        assert!(FunctionFile::parse(r#"{"n":3,"anf":[],"table_hex":"00"}"#).is_err());
        assert!(FunctionFile::parse(r#"{"n":3,"anf":[],"extra":1}"#).is_err());
    }

    #[test]
    fn serializes_with_sorted_keys() {
        let anf = AnfForm::from_monomials(3, [[0, 1, 2]]).unwrap();
        assert_eq!(FunctionFile::from_anf(&anf).to_json(), r#"{"anf":[[0,1,2]],"n":3}"#);
        let t = anf.to_table(TableCap::default()).unwrap();
        assert_eq!(FunctionFile::from_table(&t).to_json(), r#"{"n":3,"table_hex":"08"}"#);
    }
}
