use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;

use super::{are_isoclinic_data, census_key, CentralData, IsoclinismWitness};

/// Cheap invariants shared by isoclinic groups; only groups with equal keys
/// are tested with the full search.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyKey {
    pub central_quotient_order: usize,
    pub derived_order: usize,
    pub central_quotient_census: BTreeMap<usize, usize>,
    pub derived_census: BTreeMap<usize, usize>,
}

/// A partition of a catalog into isoclinism families.
#[derive(Clone, Debug, Default)]
pub struct Families {
    /// Indices into the catalog; families ordered by their first member.
    pub families: Vec<Vec<usize>>,
    /// `(representative, member, witness)` for every non-representative.
    pub witnesses: Vec<(usize, usize, IsoclinismWitness)>,
}

impl Families {
    pub fn family_of(&self, i: usize) -> Option<usize> {
        self.families.iter().position(|f| f.contains(&i))
    }
}

/// Groups are visited in catalog order; each is tested against the first
/// member of every existing family with a matching key. Since isoclinism is an
/// equivalence relation one representative per family suffices.
pub fn partition_into_families(groups: &[FiniteGroup]) -> Families {
    let data: Vec<CentralData> = groups.par_iter().map(CentralData::new).collect();
    let keys: Vec<FamilyKey> = data
        .par_iter()
        .map(|d| {
            let (q, o, qc, dc) = census_key(d);
            FamilyKey {
                central_quotient_order: q,
                derived_order: o,
                central_quotient_census: qc,
                derived_census: dc,
            }
        })
        .collect();
    let mut out = Families::default();
    for i in 0..groups.len() {
        let hit = out
            .families
            .par_iter()
            .enumerate()
            .filter(|(_, f)| keys[f[0]] == keys[i])
            .find_map_first(|(k, f)| are_isoclinic_data(&data[f[0]], &data[i]).map(|w| (k, w)));
        match hit {
            Some((k, w)) => {
                out.witnesses.push((out.families[k][0], i, w));
                out.families[k].push(i);
            }
            None => out.families.push(vec![i]),
        }
    }
    out
}
