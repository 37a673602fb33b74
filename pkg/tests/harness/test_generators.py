#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os

import pytest

from src.harness import InstanceFormatError
from src.harness import SboxFormatError
from src.harness import generate_basic
from src.harness import generate_downcld
from src.harness import read_sbox
from src.harness import sample_downcld_family
from src.harness import sbox_graph

PATH = os.path.realpath(os.path.dirname(os.path.abspath(__file__)))

PRESENT = [0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD, 0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2]


@pytest.fixture
def file_sbox():
    return os.path.join(PATH, 'present.sbox')


def test_basic_shapes():
    cube = generate_basic('cube', 3)
    assert len(cube.X) == 8
    assert cube.name == 'cube-d3-r1'
    assert cube.group == 'cube'
    assert cube.l1_radius == 1
    assert len(generate_basic('cross', 3).X) == 7
    assert generate_basic('simplex', 2, 2).X == ((0, 0), (1, 0), (0, 1))


def test_basic_shape_errors():
    with pytest.raises(InstanceFormatError):
        generate_basic('sphere', 2)
    with pytest.raises(InstanceFormatError):
        generate_basic('cube', 0)
    with pytest.raises(InstanceFormatError):
        generate_basic('cube', 2, 0)


def test_basic_instance():
    X, Y = generate_basic('simplex', 2).point_sets()
    assert len(X) == 3
    assert len(Y) == 7


def test_downcld():
    spec = generate_downcld([[1, 2], [3]], 3)
    assert spec.X == ((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 0))
    assert spec.name == 'downcld-d3-12_3-r1'
    assert spec.group == 'downcld'
    assert generate_downcld([[1, 2], [3]]).X == spec.X


def test_downcld_errors():
    with pytest.raises(InstanceFormatError):
        generate_downcld([[1], [1, 2]], 2)  # comparable members
    with pytest.raises(InstanceFormatError):
        generate_downcld([[1]], 2)  # 2 is never used
    with pytest.raises(InstanceFormatError):
        generate_downcld([[1, 5]], 3)
    with pytest.raises(InstanceFormatError):
        generate_downcld([])


def test_downcld_family():
    family = sample_downcld_family(3)
    assert family == [[[1], [2], [3]], [[1, 2], [1, 3], [2, 3]], [[1, 2, 3]], [[1, 2], [3]]]
    assert len(sample_downcld_family(4)) == 6
    for antichain in family:
        generate_downcld(antichain, 3)


def test_sbox_graph():
    assert sbox_graph([1, 0]) == ['01', '10']
    assert sbox_graph(PRESENT)[0] == '00001100'
    with pytest.raises(SboxFormatError):
        sbox_graph([0, 1, 2])
    with pytest.raises(SboxFormatError):
        sbox_graph([0, 2])


def test_read_sbox(file_sbox):
    spec = read_sbox(file_sbox)
    assert spec.name == 'sbox-present'
    assert spec.dim == 8
    assert spec.group == 'sbox'
    assert ['%s' % ''.join(map(str, p)) for p in spec.X] == sbox_graph(PRESENT)
    X, Y = spec.point_sets()
    assert len(X) == 16
    assert len(Y) == 240


def test_read_five_bit_sbox(tmp_path):
    table = [(7 * x + 3) % 32 for x in range(32)]
    graph = sbox_graph(table)
    assert len(graph) == 32
    assert all(len(v) == 10 for v in graph)

    fname = tmp_path / 'affine5.sbox'
    fname.write_text('\n'.join(graph) + '\n')
    spec = read_sbox(str(fname))
    assert spec.dim == 10
    X, Y = spec.point_sets()
    assert len(X) == 32
    assert len(Y) == 992


def test_read_sbox_errors(tmp_path):
    empty = tmp_path / 'empty.sbox'
    empty.write_text('# nothing here\n\n')
    with pytest.raises(SboxFormatError):
        read_sbox(str(empty))

    odd = tmp_path / 'odd.sbox'
    odd.write_text('010\n')
    with pytest.raises(SboxFormatError):
        read_sbox(str(odd))

    mixed = tmp_path / 'mixed.sbox'
    mixed.write_text('0101\n011\n')
    with pytest.raises(SboxFormatError) as e:
        read_sbox(str(mixed))
    assert 'line 2' in str(e.value)

    dup = tmp_path / 'dup.sbox'
    dup.write_text('0101\n0101\n')
    with pytest.raises(SboxFormatError):
        read_sbox(str(dup))

    bad = tmp_path / 'bad.sbox'
    bad.write_text('01a1\n')
    with pytest.raises(SboxFormatError):
        read_sbox(str(bad))
