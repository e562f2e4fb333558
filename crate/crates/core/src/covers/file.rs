use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Base, CoverDatum, CoverError};
use crate::groups::{catalog, parse_word, FiniteGroup, GroupError, ParseError};

/// On-disk description of a cover; words are over the group's generator names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFile {
    pub group: String,
    pub base: Base,
    #[serde(default)]
    pub handles: Vec<[String; 2]>,
    #[serde(default)]
    pub punctures_monodromy: Vec<String>,
}

#[derive(Debug, Error)]
pub enum CoverFileError {
    #[error("malformed cover file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("bad monodromy word `{word}`: {source}")]
    Word { word: String, source: ParseError },
    #[error("base declares {declared} {what}, file lists {listed}")]
    CountMismatch {
        what: &'static str,
        declared: usize,
        listed: usize,
    },
    #[error(transparent)]
    Cover(#[from] CoverError),
}

impl CoverFile {
    pub fn from_json(text: &str) -> Result<Self, CoverFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build_group(&self, max_cosets: usize) -> Result<Arc<FiniteGroup>, CoverFileError> {
        Ok(Arc::new(catalog(&self.group, max_cosets)?))
    }

    /// Evaluates the words in `group`. With `complete_last`, a file listing
    /// one puncture word fewer than declared gets the relation-completing one.
    pub fn resolve(
        &self,
        group: Arc<FiniteGroup>,
        complete_last: bool,
    ) -> Result<CoverDatum, CoverFileError> {
        if self.handles.len() != self.base.genus {
            return Err(CoverFileError::CountMismatch {
                what: "handles",
                declared: self.base.genus,
                listed: self.handles.len(),
            });
        }
        let listed = self.punctures_monodromy.len();
        let completing = complete_last && listed + 1 == self.base.punctures;
        if listed != self.base.punctures && !completing {
            return Err(CoverFileError::CountMismatch {
                what: "punctures",
                declared: self.base.punctures,
                listed,
            });
        }
        let eval = |w: &str| -> Result<usize, CoverFileError> {
            parse_word(w, group.generator_names())
                .map(|word| group.evaluate(&word))
                .map_err(|source| CoverFileError::Word {
                    word: w.to_string(),
                    source,
                })
        };
        let handles = self
            .handles
            .iter()
            .map(|[a, b]| Ok((eval(a)?, eval(b)?)))
            .collect::<Result<Vec<_>, CoverFileError>>()?;
        let punctures = self
            .punctures_monodromy
            .iter()
            .map(|w| eval(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(if completing {
            CoverDatum::completing_last(group, handles, punctures)?
        } else {
            CoverDatum::new(group, handles, punctures)?
        })
    }

    /// Writes a datum back in file form, spelling elements as words in the
    /// generators (shortest by breadth-first search).
    pub fn from_datum(spec: &str, d: &CoverDatum) -> Self {
        let g = d.group();
        let words = shortest_words(g);
        let w = |x: usize| words[x].clone();
        CoverFile {
            group: spec.to_string(),
            base: d.base(),
            handles: d.handles().iter().map(|&(a, b)| [w(a), w(b)]).collect(),
            punctures_monodromy: d.puncture_images().iter().map(|&c| w(c)).collect(),
        }
    }
}

fn shortest_words(g: &FiniteGroup) -> Vec<String> {
    let names = g.generator_names();
    let mut words: Vec<Option<String>> = vec![None; g.order()];
    words[0] = Some("1".to_string());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (k, &s) in g.generators().iter().enumerate() {
            let y = g.mul(x, s);
            if words[y].is_none() {
                let prefix = words[x].as_deref().unwrap();
                words[y] = Some(if x == 0 {
                    names[k].clone()
                } else {
                    format!("{prefix}*{}", names[k])
                });
                queue.push_back(y);
            }
        }
    }
    words.into_iter().map(|w| w.expect("generators generate")).collect()
}
