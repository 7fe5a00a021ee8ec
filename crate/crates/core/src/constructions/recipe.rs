use std::fmt;
use std::str::FromStr;

use super::ConstructionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    /// Point-line incidence graph of the projective plane over `F_q`.
    Pg,
    /// Random graph with one edge deleted per `K_{t,t}` copy.
    Random,
    /// A bipartite graph handed in by the caller.
    Supplied,
}

impl GadgetKind {
    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::Pg => "pg",
            GadgetKind::Random => "random",
            GadgetKind::Supplied => "supplied",
        }
    }

    pub fn default_for(t: usize) -> GadgetKind {
        if t == 2 {
            GadgetKind::Pg
        } else {
            GadgetKind::Random
        }
    }
}

impl FromStr for GadgetKind {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pg" => Ok(GadgetKind::Pg),
            "random" => Ok(GadgetKind::Random),
            "supplied" => Ok(GadgetKind::Supplied),
            _ => Err(ConstructionError::InvalidArgument(format!(
                "unknown gadget kind `{s}`"
            ))),
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters that determine an extremal construction completely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub t: usize,
    pub k: usize,
    pub sigma: usize,
    pub gadget: GadgetKind,
    pub q: u64,
    pub seed: u64,
    /// Vertices of degree at most this are trimmed from the gadget source.
    pub trim: usize,
}

impl ConstructionRecipe {
    pub fn new(t: usize, k: usize, sigma: usize) -> Self {
        ConstructionRecipe {
            t,
            k,
            sigma,
            gadget: GadgetKind::default_for(t),
            q: 2,
            seed: 0,
            trim: 0,
        }
    }

    /// Part size `3kσ`.
    pub fn n(&self) -> usize {
        3 * self.k * self.sigma
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        if self.t == 0 || self.k == 0 || self.sigma == 0 {
            return Err(ConstructionError::InvalidArgument(
                "t, k and sigma must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for ConstructionRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t={} k={} sigma={} gadget={} q={} seed={} trim={}",
            self.t, self.k, self.sigma, self.gadget, self.q, self.seed, self.trim
        )
    }
}

impl FromStr for ConstructionRecipe {
    type Err = ConstructionError;

    /// Parses `key=value` tokens. `t`, `k` and `sigma` are required; the
    /// rest take the defaults of [`ConstructionRecipe::new`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: String| ConstructionError::InvalidArgument(m);
        let (mut t, mut k, mut sigma) = (None, None, None);
        let (mut gadget, mut q, mut seed, mut trim) = (None, None, None, None);
        for tok in s.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got `{tok}`")))?;
            let num = || {
                val.parse::<u64>()
                    .map_err(|_| bad(format!("bad value for {key}: `{val}`")))
            };
            match key {
                "t" => t = Some(num()? as usize),
                "k" => k = Some(num()? as usize),
                "sigma" => sigma = Some(num()? as usize),
                "gadget" => gadget = Some(val.parse()?),
                "q" => q = Some(num()?),
                "seed" => seed = Some(num()?),
                "trim" => trim = Some(num()? as usize),
                _ => return Err(bad(format!("unknown recipe key `{key}`"))),
            }
        }
        let missing = |name: &str| bad(format!("recipe is missing `{name}`"));
        let mut r = ConstructionRecipe::new(
            t.ok_or_else(|| missing("t"))?,
            k.ok_or_else(|| missing("k"))?,
            sigma.ok_or_else(|| missing("sigma"))?,
        );
        r.gadget = gadget.unwrap_or(r.gadget);
        r.q = q.unwrap_or(r.q);
        r.seed = seed.unwrap_or(r.seed);
        r.trim = trim.unwrap_or(r.trim);
        Ok(r)
    }
}
