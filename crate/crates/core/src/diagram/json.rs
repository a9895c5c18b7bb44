use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{DiagramError, Event, Sign, SliceWord, TangleDiagram};

#[derive(Serialize, Deserialize)]
struct Raw {
    width_in: usize,
    events: Vec<(String, usize)>,
    width_out: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orient: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    twists: BTreeMap<String, i32>,
}

impl TangleDiagram {
    pub fn to_json_value(&self) -> serde_json::Value {
        let events = self
            .events()
            .iter()
            .map(|e| match *e {
                Event::Cup(i) => ("cup".to_string(), i),
                Event::Cap(i) => ("cap".to_string(), i),
                Event::Cross(i, Sign::Pos) => ("x+".to_string(), i),
                Event::Cross(i, Sign::Neg) => ("x-".to_string(), i),
            })
            .collect();
        let raw = Raw {
            width_in: self.width_in(),
            events,
            width_out: self.width_out(),
            orient: self.orient.as_ref().map(|o| o.iter().map(|&f| if f { "u" } else { "d" }.to_string()).collect()),
            twists: self.twists.iter().map(|(c, t)| (c.to_string(), *t)).collect(),
        };
        serde_json::to_value(raw).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(s: &str) -> Result<Self, DiagramError> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| DiagramError::Json(e.to_string()))?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self, DiagramError> {
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| DiagramError::Json(e.to_string()))?;
        let events = raw
            .events
            .iter()
            .map(|(k, i)| match k.as_str() {
                "cup" => Ok(Event::Cup(*i)),
                "cap" => Ok(Event::Cap(*i)),
                "x+" => Ok(Event::Cross(*i, Sign::Pos)),
                "x-" => Ok(Event::Cross(*i, Sign::Neg)),
                other => Err(DiagramError::Json(format!("unknown event `{other}`"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let word = SliceWord::new(raw.width_in, events)?;
        if word.width_out() != raw.width_out {
            return Err(DiagramError::Arity(word.width_out(), raw.width_out));
        }
        let orient = raw
            .orient
            .map(|o| {
                o.iter()
                    .map(|f| match f.as_str() {
                        "u" => Ok(true),
                        "d" => Ok(false),
                        other => Err(DiagramError::Json(format!("bad orientation flag `{other}`"))),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?;
        let twists = raw
            .twists
            .iter()
            .map(|(c, t)| c.parse::<usize>().map(|c| (c, *t)).map_err(|_| DiagramError::Json(format!("bad component `{c}`"))))
            .collect::<Result<BTreeMap<_, _>, _>>()?;
        let d = TangleDiagram::new(word, orient)?;
        let n = d.component_count();
        if let Some(c) = twists.keys().find(|&&c| c >= n) {
            return Err(DiagramError::Json(format!("twist on missing component {c}")));
        }
        Ok(d.with_twists(twists))
    }
}
