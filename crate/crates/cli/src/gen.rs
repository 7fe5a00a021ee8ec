use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Subcommand};
use tritur_core::constructions::{
    andrasfai, compose_extremal, make_gadget, ConstructionError, ConstructionRecipe, GadgetKind,
};
use tritur_core::graph::TripartiteGraph;

use super::{exit, with_suffix, write_file, Failure, Outcome};

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
}

#[derive(Args, Debug, Clone)]
pub struct RecipeArgs {
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub sigma: usize,
    /// pg, random or supplied; defaults to pg for t = 2, else random.
    #[arg(long)]
    pub gadget: Option<GadgetKind>,
    #[arg(long, default_value_t = 2)]
    pub q: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub trim: usize,
}

impl RecipeArgs {
    pub fn recipe(&self) -> ConstructionRecipe {
        let mut r = ConstructionRecipe::new(self.t, self.k, self.sigma);
        if let Some(g) = self.gadget {
            r.gadget = g;
        }
        r.q = self.q;
        r.seed = self.seed;
        r.trim = self.trim;
        r
    }
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// The Andrásfai graph on 3k - 1 vertices.
    Andrasfai {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blowup plus gadget copies; also writes `<out>.recipe`.
    Bundle {
        #[command(flatten)]
        recipe: RecipeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The trimmed K_{t,t}-free gadget alone.
    Gadget {
        #[command(flatten)]
        recipe: RecipeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn construction(e: ConstructionError) -> Failure {
    match e {
        ConstructionError::Search(s) => s.into(),
        other => Failure::new(exit::USAGE, other.to_string()),
    }
}

fn emit(out: &mut dyn Write, path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

pub fn run(args: &GenArgs, out: &mut dyn Write) -> Outcome {
    match &args.kind {
        GenKind::Andrasfai { k, out: path } => {
            let base = andrasfai(*k).map_err(construction)?;
            let g = TripartiteGraph::from_edges([*k, *k, *k - 1], base.edges())
                .map_err(|e| Failure::usage(e.to_string()))?;
            emit(out, path, &g.to_text())?;
        }
        GenKind::Bundle { recipe, out: path } => {
            let b = compose_extremal(&recipe.recipe()).map_err(construction)?;
            emit(out, path, &b.graph.to_text())?;
            if let Some(p) = path {
                write_file(&with_suffix(p, ".recipe"), &b.sidecar_text())?;
            }
        }
        GenKind::Gadget { recipe, out: path } => {
            let h = make_gadget(&recipe.recipe()).map_err(construction)?;
            emit(out, path, &h.to_text())?;
        }
    }
    Ok(exit::OK)
}
