//! Metric identifiers and their polarity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Whether a metric improves upward or downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polarity {
    HigherBetter,
    LowerBetter,
}

impl Polarity {
    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::HigherBetter => "higher-better",
            Polarity::LowerBetter => "lower-better",
        }
    }
}

macro_rules! metrics {
    ($($variant:ident => $id:literal, $symbol:literal, $pol:ident;)*) => {
        /// Every metric the toolkit can report.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Metric {
            $($variant,)*
        }

        impl Metric {
            pub const ALL: &'static [Metric] = &[$(Metric::$variant,)*];

            /// Lower-case identifier used in reports and on the command line.
            pub fn id(self) -> &'static str {
                match self {
                    $(Metric::$variant => $id,)*
                }
            }

            /// Conventional upper-case symbol, e.g. `VOI`.
            pub fn symbol(self) -> &'static str {
                match self {
                    $(Metric::$variant => $symbol,)*
                }
            }

            pub fn polarity(self) -> Polarity {
                match self {
                    $(Metric::$variant => Polarity::$pol,)*
                }
            }
        }
    };
}

metrics! {
    Tnr => "tnr", "TNR", HigherBetter;
    Tpr => "tpr", "TPR", HigherBetter;
    Plr => "plr", "PLR", HigherBetter;
    Nlr => "nlr", "NLR", LowerBetter;
    Fpr => "fpr", "FPR", LowerBetter;
    Fnr => "fnr", "FNR", LowerBetter;
    Precision => "p", "P", HigherBetter;
    FMeasure => "f", "F", HigherBetter;
    F1Conventional => "f1_conventional", "F1", HigherBetter;
    Xor => "xor", "XOR", LowerBetter;
    Accuracy => "ac", "AC", HigherBetter;
    ErrorProbability => "ep", "EP", LowerBetter;
    VolumetricDistance => "vd", "VD", LowerBetter;
    VolumetricSimilarity => "vs", "VS", HigherBetter;
    Auc => "auc", "AUC", HigherBetter;
    Jaccard => "ji", "JI", HigherBetter;
    Dice => "dice", "Dice", HigherBetter;
    Fmi => "fmi", "FMI", HigherBetter;
    RandIndex => "ri", "RI", HigherBetter;
    Pri => "pri", "PRI", HigherBetter;
    Npr => "npr", "NPR", HigherBetter;
    Mce => "mce", "MCE", LowerBetter;
    ErrorRate => "er", "ER", LowerBetter;
    MutualInformation => "mi", "MI", HigherBetter;
    Voi => "voi", "VOI", LowerBetter;
    Nmi => "nmi", "NMI", HigherBetter;
    Lce => "lce", "LCE", LowerBetter;
    Gce => "gce", "GCE", LowerBetter;
    Bce => "bce", "BCE", LowerBetter;
    Hausdorff => "hausd", "HAUSD", LowerBetter;
    Masd => "masd", "MASD", LowerBetter;
    Asd => "asd", "ASD", LowerBetter;
    Nsd => "nsd", "NSD", LowerBetter;
    Bde => "bde", "BDE", LowerBetter;
    Hamming => "hd", "HD", LowerBetter;
    BoundaryHamming => "bhd", "BHD", LowerBetter;
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Metric {
    type Err = Error;

    /// Accepts either the identifier or the symbol, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        Metric::ALL
            .iter()
            .copied()
            .find(|m| m.id().eq_ignore_ascii_case(s) || m.symbol().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownMetric(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MetricPolarity {
    pub name: &'static str,
    pub direction: Polarity,
}

/// One entry per exported metric.
pub fn polarity_table() -> Vec<MetricPolarity> {
    Metric::ALL.iter().map(|m| MetricPolarity { name: m.symbol(), direction: m.polarity() }).collect()
}

/// Looks a metric up by symbol or identifier.
pub fn polarity_of(name: &str) -> Option<Polarity> {
    name.parse::<Metric>().ok().map(Metric::polarity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn table_lookups() {
        assert_eq!(polarity_of("VOI"), Some(Polarity::LowerBetter));
        assert_eq!(polarity_of("AUC"), Some(Polarity::HigherBetter));
        assert_eq!(polarity_of("nope"), None);
    }

    #[test]
    fn every_metric_has_exactly_one_entry() {
        let table = polarity_table();
        assert_eq!(table.len(), Metric::ALL.len());
        let names: HashSet<_> = table.iter().map(|e| e.name).collect();
        assert_eq!(names.len(), table.len());
        for m in Metric::ALL {
            let hits = table.iter().filter(|e| e.name == m.symbol()).count();
            assert_eq!(hits, 1, "{m}");
            assert_eq!(m.id().parse::<Metric>().unwrap(), *m);
            assert_eq!(m.symbol().parse::<Metric>().unwrap(), *m);
        }
    }

    #[test]
    fn grouped_polarities() {
        let up = ["TNR", "TPR", "P", "AC", "F", "AUC", "VS", "JI", "Dice", "FMI", "RI", "PRI", "NPR", "MI", "NMI"];
        let down = [
            "FPR", "FNR", "XOR", "EP", "VD", "MCE", "ER", "LCE", "GCE", "BCE", "VOI", "HAUSD", "MASD", "ASD", "NSD",
            "BDE", "HD", "BHD",
        ];
        for s in up {
            assert_eq!(polarity_of(s), Some(Polarity::HigherBetter), "{s}");
        }
        for s in down {
            assert_eq!(polarity_of(s), Some(Polarity::LowerBetter), "{s}");
        }
    }
}
