use std::sync::OnceLock;

use crate::chamber::{build_coset_chambers, ChamberSystem};
use crate::error::Result;
use crate::grp::{sylow_subgroup, PermGroup, ORBIT_BUDGET};
use crate::matgrp::{
    involution_census, involution_census_with, line_report, make_aut_su4, make_aut_su4_semilinear, make_named_group,
    make_sp6, natural_report, o6_minus_form, parabolics, sp6_form, spin_report, three_classes, DirectBuilder,
    GroupBuilder, GroupName, InvolutionCensus, LineReport, NamedGroup, NaturalReport, ParabolicSet, SpinReport,
    SylowTable, ThreeReport,
};

use super::CachedBuilder;

fn memo<T>(cell: &OnceLock<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

/// Shared, lazily built objects for the checks. Each object is built once and
/// then read concurrently.
pub struct Workbench {
    seed: u64,
    builder: Box<dyn GroupBuilder>,
    x: OnceLock<Result<NamedGroup>>,
    y: OnceLock<Result<NamedGroup>>,
    y_semilinear: OnceLock<Result<NamedGroup>>,
    others: [OnceLock<Result<NamedGroup>>; 5],
    sx: OnceLock<Result<PermGroup>>,
    sy: OnceLock<Result<PermGroup>>,
    table_x: OnceLock<Result<SylowTable>>,
    table_y: OnceLock<Result<SylowTable>>,
    census_x: OnceLock<Result<InvolutionCensus>>,
    census_y: OnceLock<Result<InvolutionCensus>>,
    census_y_sympl: OnceLock<Result<InvolutionCensus>>,
    three_x: OnceLock<Result<ThreeReport>>,
    three_y: OnceLock<Result<ThreeReport>>,
    parabolics: OnceLock<Result<ParabolicSet>>,
    natural: OnceLock<Result<NaturalReport>>,
    spin: OnceLock<Result<SpinReport>>,
    line: OnceLock<Result<LineReport>>,
    chambers: OnceLock<Result<ChamberSystem>>,
}

impl Workbench {
    /// `seed` drives the composition-factor search for the spin module.
    pub fn new(seed: u64, cache_dir: Option<std::path::PathBuf>) -> Self {
        let builder: Box<dyn GroupBuilder> = match cache_dir {
            Some(d) => Box::new(CachedBuilder::new(d)),
            None => Box::new(DirectBuilder),
        };
        Workbench {
            seed,
            builder,
            x: OnceLock::new(),
            y: OnceLock::new(),
            y_semilinear: OnceLock::new(),
            others: Default::default(),
            sx: OnceLock::new(),
            sy: OnceLock::new(),
            table_x: OnceLock::new(),
            table_y: OnceLock::new(),
            census_x: OnceLock::new(),
            census_y: OnceLock::new(),
            census_y_sympl: OnceLock::new(),
            three_x: OnceLock::new(),
            three_y: OnceLock::new(),
            parabolics: OnceLock::new(),
            natural: OnceLock::new(),
            spin: OnceLock::new(),
            line: OnceLock::new(),
            chambers: OnceLock::new(),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn builder(&self) -> &dyn GroupBuilder {
        self.builder.as_ref()
    }

    /// `Sp6_2` on `V ⊕ U`.
    pub fn x(&self) -> Result<&NamedGroup> {
        memo(&self.x, || make_sp6(self.seed, self.builder()))
    }

    /// `AutSU4_2` inside `x`.
    pub fn y(&self) -> Result<&NamedGroup> {
        memo(&self.y, || make_aut_su4(self.x()?, self.builder()))
    }

    pub fn y_semilinear(&self) -> Result<&NamedGroup> {
        memo(&self.y_semilinear, || make_aut_su4_semilinear(self.builder()))
    }

    pub fn group(&self, name: GroupName) -> Result<&NamedGroup> {
        let slot = match name {
            GroupName::Sp62 => return self.x(),
            GroupName::AutSu42 => return self.y(),
            GroupName::Su42 => 0,
            GroupName::O72 => 1,
            GroupName::Go4Plus3 => 2,
            GroupName::Go4Minus3 => 3,
            GroupName::Co4Plus3 => 4,
        };
        memo(&self.others[slot], || make_named_group(name, self.seed, self.builder()))
    }

    pub fn sylow_x(&self) -> Result<&PermGroup> {
        memo(&self.sx, || sylow_subgroup(&self.x()?.group, 2))
    }

    pub fn sylow_y(&self) -> Result<&PermGroup> {
        memo(&self.sy, || sylow_subgroup(&self.y()?.group, 2))
    }

    pub fn table_x(&self) -> Result<&SylowTable> {
        memo(&self.table_x, || SylowTable::new(self.sylow_x()?))
    }

    pub fn table_y(&self) -> Result<&SylowTable> {
        memo(&self.table_y, || SylowTable::new(self.sylow_y()?))
    }

    pub fn census_x(&self) -> Result<&InvolutionCensus> {
        memo(&self.census_x, || involution_census(self.x()?, self.sylow_x()?))
    }

    /// `AutSU4_2` classes named with the symplectic rule, as for `Sp6_2`.
    pub fn census_y(&self) -> Result<&InvolutionCensus> {
        memo(&self.census_y_sympl, || involution_census_with(self.y()?, self.sylow_y()?, &sp6_form()))
    }

    /// `AutSU4_2` classes named with the orthogonal rule.
    pub fn census_y_orthogonal(&self) -> Result<&InvolutionCensus> {
        memo(&self.census_y, || involution_census_with(self.y()?, self.sylow_y()?, &o6_minus_form()))
    }

    pub fn three_x(&self) -> Result<&ThreeReport> {
        memo(&self.three_x, || three_classes(self.x()?))
    }

    pub fn three_y(&self) -> Result<&ThreeReport> {
        memo(&self.three_y, || three_classes(self.y()?))
    }

    pub fn parabolics(&self) -> Result<&ParabolicSet> {
        memo(&self.parabolics, || parabolics(self.x()?, self.sylow_x()?))
    }

    pub fn natural(&self) -> Result<&NaturalReport> {
        memo(&self.natural, || natural_report(self.x()?, self.parabolics()?))
    }

    pub fn spin(&self) -> Result<&SpinReport> {
        memo(&self.spin, || spin_report(self.x()?, self.parabolics()?))
    }

    pub fn line(&self) -> Result<&LineReport> {
        memo(&self.line, || line_report(self.x()?, self.parabolics()?))
    }

    pub fn chambers(&self) -> Result<&ChamberSystem> {
        memo(&self.chambers, || {
            let ps = self.parabolics()?;
            build_coset_chambers(&self.x()?.group, &ps.s, &ps.minimal, ORBIT_BUDGET)
        })
    }
}
