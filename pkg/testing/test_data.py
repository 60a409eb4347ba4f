import pytest

from equilevel import generate
from equilevel.data import (
    ConfigManager, DataProperty, DefaultsDataSource, LocalDataSource,
    ObjectDataSource, ProblemFileError, dump_problem, load_problem,
    parse_problem,
)
from equilevel.lattice import DEFAULT_BUDGET

def test_basic_config():
    ods = ObjectDataSource({
        'budget': {'ideals': 1000, 'vertices': 12},
        'workers': 4,
    })
    assert ods.get_property_value(DataProperty.BUDGET_IDEALS) == 1000
    assert ods.get_property_value(DataProperty.BUDGET_VERTICES) == 12
    assert ods.get_property_value(DataProperty.WORKERS) == 4

def test_missing_values():
    ods = ObjectDataSource({})
    for prop in DataProperty:
        with pytest.raises(LookupError):
            ods.get_property_value(prop)

def test_bad_values():
    # bogus values are ignored, as if they weren't there
    ods = ObjectDataSource({
        'budget': {'ideals': 0, 'vertices': 'many'},
        'workers': True,
    })
    for prop in DataProperty:
        with pytest.raises(LookupError):
            ods.get_property_value(prop)
    with pytest.raises(LookupError):
        ObjectDataSource({'budget': 5}).get_property_value(DataProperty.BUDGET_IDEALS)
    with pytest.raises(LookupError):
        ObjectDataSource({'workers': -1}).get_property_value(DataProperty.WORKERS)

def test_layering():
    confs = ConfigManager([
        ObjectDataSource({'workers': 0, 'budget': {'ideals': -5}}),
        ObjectDataSource({'budget': {'ideals': 64}}),
        DefaultsDataSource(),
    ])
    assert confs.get_property_value(DataProperty.WORKERS) == 0
    assert confs.get_property_value(DataProperty.BUDGET_IDEALS) == 64
    assert confs.get_property_value(DataProperty.BUDGET_VERTICES) == 32

def test_defaults():
    defaults = DefaultsDataSource()
    assert defaults.get_property_value(DataProperty.BUDGET_IDEALS) == DEFAULT_BUDGET
    assert defaults.get_property_value(DataProperty.WORKERS) >= 0

def test_local_source(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text("workers = 2\n[budget]\nvertices = 8\n")
    source = LocalDataSource(str(path))
    assert source.update() is None
    assert source.exists()
    assert source.get_property_value(DataProperty.WORKERS) == 2
    assert source.get_property_value(DataProperty.BUDGET_VERTICES) == 8

def test_local_source_errors(tmp_path):
    missing = LocalDataSource(str(tmp_path / "nope.toml"))
    assert isinstance(missing.update(), FileNotFoundError)
    assert not missing.exists()
    broken_path = tmp_path / "broken.toml"
    broken_path.write_text("workers = \n")
    broken = LocalDataSource(str(broken_path))
    assert broken.update() is not None
    with pytest.raises(LookupError):
        broken.get_property_value(DataProperty.WORKERS)

def test_parse_matching():
    kind, inst, params = parse_problem(
        'kind = "matching"\n'
        '[payload]\n'
        'left_count = 3\n'
        'right_count = 3\n'
        'edges = [[0, 0], [1, 0], [2, 2]]\n'
    )
    assert kind == 'matching'
    assert inst.edges == ((0, 0), (1, 0), (2, 2))
    assert params == {}

def test_parse_digraph_forms():
    _kind, from_arcs, _params = parse_problem(
        'kind = "reach"\n[payload]\nvertex_count = 2\narcs = [[0, 1]]\n'
    )
    _kind, from_matrix, _params = parse_problem(
        'kind = "reach"\n[payload]\nvertex_count = 2\n'
        'matrix = [[false, true], [false, false]]\n'
    )
    assert from_arcs == from_matrix

def test_parse_subset_sum():
    kind, comp, params = parse_problem('kind = "subset-sum"\n[payload]\nx = [2, 3, 5]\nk = 8\n')
    assert kind == 'subset-sum'
    assert params == {'k': 8, 'x': [2, 3, 5]}
    assert comp.process_count == 3

@pytest.mark.parametrize('text', [
    'kind = "matching"\n[payload\n',
    'kind = "sorting"\n[payload]\n',
    'kind = "matching"\n',
    'kind = "matching"\n[payload]\nleft_count = 1\n',
    'kind = "matching"\n[payload]\nleft_count = 1\nright_count = 1\nedges = [[0, 5]]\n',
    'kind = "marriage"\n[payload]\nn = 2\nmpref = [[0, 0], [0, 1]]\nrank = [[0, 1], [0, 1]]\n',
    'kind = "subset-sum"\n[payload]\nx = [2, 0]\n',
    'kind = "subset-sum"\n[payload]\nx = [2]\nk = "two"\n',
    'kind = "reach"\n[payload]\nvertex_count = 2\narcs = [[0, 2]]\n',
])
def test_bad_problems(text):
    with pytest.raises(ProblemFileError):
        parse_problem(text)

def test_load_problem(tmp_path):
    path = tmp_path / "p.toml"
    path.write_text('kind = "housing"\n[payload]\nn = 2\npref = [[1, 0], [0, 1]]\n')
    kind, inst, _params = load_problem(str(path))
    assert kind == 'housing'
    assert inst.pref == ((1, 0), (0, 1))
    with pytest.raises(ProblemFileError):
        load_problem(str(tmp_path / "missing.toml"))

@pytest.mark.parametrize('kind', list(generate.GENERATORS))
def test_dump_then_parse(kind):
    inst, params = generate.generate(kind, 3)
    text = dump_problem(kind, inst, params)
    assert text.startswith("# Generated by equilevel\n")
    parsed_kind, parsed, parsed_params = parse_problem(text)
    assert parsed_kind == kind
    assert parsed == inst
    assert parsed_params.get('k') == params.get('k')
