//! Serde adapter storing a [`Graph`] as its graph6 string.

use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

use crate::graph::Graph;
use crate::graph6;

pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&graph6::encode(g))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
    let text = String::deserialize(d)?;
    graph6::decode_str(&text).map_err(D::Error::custom)
}

/// The same adapter for `Option<Graph>`, with `null` for `None`.
pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(g: &Option<Graph>, s: S) -> Result<S::Ok, S::Error> {
        match g {
            Some(g) => s.serialize_some(&graph6::encode(g)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Graph>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|text| graph6::decode_str(&text).map_err(D::Error::custom))
            .transpose()
    }
}
