//! Stable JSON shape for evaluated values.

use serde::{Deserialize, Serialize};

use crate::hyperreal::Hyperreal;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Rational,
    pub base: Rational,
    pub power: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ValueReport {
    pub input: String,
    pub value: String,
    pub principal: String,
    pub standard_part: Option<String>,
    pub terms: Vec<TermJson>,
}

impl ValueReport {
    pub fn new(input: &str, value: &Hyperreal) -> Self {
        ValueReport {
            input: input.to_string(),
            value: value.to_string(),
            principal: value.principal_value().to_string(),
            standard_part: value.standard_part().map(|c| c.to_string()),
            terms: value
                .terms()
                .iter()
                .map(|t| TermJson {
                    coeff: t.coeff().clone(),
                    base: t.base().clone(),
                    power: t.power(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_hyperreal;

    #[test]
    fn schema() {
        let v = parse_hyperreal("w^2/2 + w/2").unwrap();
        let json = serde_json::to_value(ValueReport::new("sum(i=1..omega, i)", &v)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "input": "sum(i=1..omega, i)",
                "value": "w^2/2 + w/2",
                "principal": "w^2/2",
                "standardPart": null,
                "terms": [
                    {"coeff": "1/2", "base": "1", "power": 2},
                    {"coeff": "1/2", "base": "1", "power": 1},
                ],
            })
        );
        let conv = parse_hyperreal("2 - 2*(1/2)^w").unwrap();
        let json = serde_json::to_value(ValueReport::new("x", &conv)).unwrap();
        assert_eq!(json["standardPart"], "2");
    }
}
