#! /usr/bin/env python

import json
from functools import partial

import numpy as np
from numpy.testing import TestCase, assert_equal
from sslart import save_model, load_model, to_document, from_document
from sslart import SslArtModel, ArtmapModel, ArtParams, train_ensemble
from sslart import make_synthetic, split, SplitSpec, FORMAT, VERSION
from sslart import PersistenceError, DataError
from utils import get_tmp_path, del_tmp_path, write_text_file

def predictions(model, X, depth = None):
    return [p.label for p in model.predict_many(X, depth)]

class sslart_persist_test_case(TestCase):

    def setUp(self):
        ds = make_synthetic('rings', 150, seed=2)
        self.labeled, self.unlabeled, self.test = split(ds,
                SplitSpec(0.2, 0.3, seed=2))
        self.path = get_tmp_path('.json')

    def tearDown(self):
        del_tmp_path(self.path)

    def otm(self):
        m = SslArtModel(2, ['inner', 'outer'], ArtParams(rho=0.85,
            alpha=0.01), search_depth=3)
        return m.fit(self.labeled.pairs(), self.unlabeled.X)

    def test_roundtrip_otm(self):
        m = self.otm()
        save_model(m, self.path)
        other = load_model(self.path)
        assert type(other) is SslArtModel
        assert_equal(other.art_a.weights, m.art_a.weights)
        assert_equal(other.art_b.weights, m.art_b.weights)
        assert_equal(other.otm.counts, m.otm.counts)
        assert_equal(other.node_labels(), m.node_labels())
        assert other.classes == m.classes
        assert other.params == m.params
        assert other.search_depth == 3
        assert other.n_stage1 == m.n_stage1
        assert predictions(other, self.test.X) == predictions(m, self.test.X)

    def test_roundtrip_oto(self):
        m = ArtmapModel(2, 2, ArtParams(rho=0.7), rho_ab=0.9, delta=0.01)
        m.fit(self.labeled.pairs(), self.unlabeled.X)
        save_model(m, self.path)
        other = load_model(self.path)
        assert type(other) is ArtmapModel
        assert_equal(other.links, m.links)
        assert (other.rho_ab, other.delta) == (0.9, 0.01)
        assert predictions(other, self.test.X) == predictions(m, self.test.X)

    def test_roundtrip_ensemble(self):
        factory = partial(SslArtModel, 2, self.labeled.classes)
        e = train_ensemble(self.labeled.X, self.labeled.y, self.unlabeled.X,
                factory, n_members=3, seed=5, voting='majority')
        save_model(e, self.path)
        other = load_model(self.path)
        assert other.n_members == 3
        assert other.voting == 'majority'
        assert other.seeds == e.seeds
        assert_equal(other.class_weights, e.class_weights)
        assert predictions(other, self.test.X) == predictions(e, self.test.X)

    def test_metadata(self):
        save_model(self.otm(), self.path, {'dataset': 'rings', 'seed': 2})
        _, metadata = load_model(self.path, with_metadata=True)
        assert metadata == {'dataset': 'rings', 'seed': 2}

    def test_untrained_model(self):
        save_model(SslArtModel(3, 2), self.path)
        other = load_model(self.path)
        assert other.n_committed == 0
        assert other.dim == 3

    def test_document_header(self):
        doc = to_document(self.otm())
        assert doc['format'] == FORMAT
        assert doc['version'] == VERSION
        assert doc['kind'] == 'ssl-art'

    def test_unsupported_version(self):
        doc = to_document(self.otm())
        doc['version'] = VERSION + 1
        with self.assertRaises(PersistenceError):
            from_document(doc)

    def test_not_a_model(self):
        with self.assertRaises(PersistenceError):
            from_document({'format': 'other'})

    def test_missing_key(self):
        doc = to_document(self.otm())
        del doc['art_a']
        with self.assertRaises(PersistenceError):
            from_document(doc)

    def test_weights_out_of_range(self):
        doc = to_document(self.otm())
        doc['art_a'][0][0] = 1.5
        with self.assertRaises(PersistenceError):
            from_document(doc)

    def test_class_vigilance_below_one(self):
        doc = to_document(self.otm())
        doc['rho_b'] = 0.5
        with self.assertRaises(PersistenceError):
            from_document(doc)

    def test_inconsistent_counts(self):
        doc = to_document(self.otm())
        doc['counts'] = doc['counts'][:-1]
        with self.assertRaises(PersistenceError):
            from_document(doc)

    def test_invalid_json(self):
        write_text_file(self.path, '{"format": ')
        with self.assertRaises(PersistenceError):
            load_model(self.path)

    def test_persistence_error_is_data_error(self):
        write_text_file(self.path, '[]')
        with self.assertRaises(DataError):
            load_model(self.path)

    def test_document_is_json(self):
        text = json.dumps(to_document(self.otm()))
        assert isinstance(from_document(json.loads(text)), SslArtModel)

    def test_unknown_model(self):
        with self.assertRaises(PersistenceError):
            to_document(object())

if __name__ == '__main__':
    from unittest import main
    main()
