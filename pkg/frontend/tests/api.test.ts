import assert from 'node:assert/strict';
import { test } from 'node:test';

import { ApiClient, ApiError } from '../src/api.js';
import type { CompareResponse, DestinationGuess, PlanRecord } from '../src/types.js';
import { fakeFetch, jsonResponse, loadFixture } from './helpers.js';

const plan = loadFixture<PlanRecord>('plan_response.json');
const guess = loadFixture<DestinationGuess>('infer_response.json');
const comparison = loadFixture<CompareResponse>('compare_response.json');

test('planTrip posts the body to /api/plan and returns the record', async () => {
  const { fetchFn, calls } = fakeFetch(() => jsonResponse(plan));
  const api = new ApiClient('http://svc.test', fetchFn);
  const body = {
    destination: 'paris',
    days: 4,
    preferences: { historical: 5, amusement: 1, natural: 1, cultural: 1 },
  };
  const record = await api.planTrip(body);
  assert.equal(calls[0].url, 'http://svc.test/api/plan');
  assert.equal(calls[0].method, 'POST');
  assert.deepEqual(calls[0].body, body);
  assert.equal(record.id, plan.id);
});

test('stage failures raise ApiError naming the stage', async () => {
  const { fetchFn } = fakeFetch(() =>
    jsonResponse({ error: { stage: 'sources', message: 'all 3 sources failed' } }, 422),
  );
  const api = new ApiClient('http://svc.test', fetchFn);
  await assert.rejects(
    api.planTrip({ destination: 'x', days: 1, preferences: null }),
    (err: unknown) => {
      assert.ok(err instanceof ApiError);
      assert.equal(err.stage, 'sources');
      assert.equal(err.status, 422);
      assert.equal(err.bannerText(), 'sources: all 3 sources failed');
      return true;
    },
  );
});

test('network failure becomes a service-unreachable ApiError', async () => {
  const api = new ApiClient('http://svc.test', async () => {
    throw new Error('ECONNREFUSED');
  });
  await assert.rejects(api.health(), (err: unknown) => {
    assert.ok(err instanceof ApiError);
    assert.match(err.message, /unreachable/);
    return true;
  });
});

test('comparePlan sends alternative preferences or an empty object', async () => {
  const { fetchFn, calls } = fakeFetch(() => jsonResponse(comparison));
  const api = new ApiClient('http://svc.test', fetchFn);
  await api.comparePlan(plan.id, null);
  assert.deepEqual(calls[0].body, {});
  await api.comparePlan(plan.id, { historical: 2, amusement: 2, natural: 2, cultural: 2 });
  assert.deepEqual(calls[1].body, {
    preferences: { historical: 2, amusement: 2, natural: 2, cultural: 2 },
  });
  assert.equal(calls[0].url, `http://svc.test/api/plan/${plan.id}/compare`);
});

test('inferDestination posts tabs and returns the guess', async () => {
  const { fetchFn, calls } = fakeFetch(() => jsonResponse(guess));
  const api = new ApiClient('http://svc.test', fetchFn);
  const tabs = [{ url: 'https://blog.example/things-to-do-in-bangalore', title: '' }];
  const got = await api.inferDestination(tabs);
  assert.deepEqual(calls[0].body, { tabs });
  assert.equal(got.destination, 'bangalore');
  assert.equal(got.confidence, 1.0);
});

test('getPlan URL-encodes the id', async () => {
  const { fetchFn, calls } = fakeFetch(() => jsonResponse(plan));
  const api = new ApiClient('http://svc.test', fetchFn);
  await api.getPlan('abc/..#');
  assert.equal(calls[0].url, 'http://svc.test/api/plan/abc%2F..%23');
});
