import * as THREE from 'three';

import { ApiClient, ApiError } from './api.js';
import { OrbitControl } from './controls.js';
import { emptyGraph, mergeRegion, type GraphModel } from './graph.js';
import {
  applyStyles,
  buildSceneGraph,
  canvasLabelFactory,
  type BuiltScene,
} from './scene.js';
import { computeHighlight, RequestSequencer } from './view.js';

const api = new ApiClient('');
const sequencer = new RequestSequencer();

let graph: GraphModel = emptyGraph();
let built: BuiltScene | null = null;
let highlighted = new Set<number>();
let selected: number | null = null;

const canvas = document.getElementById('view') as HTMLCanvasElement;
const banner = document.getElementById('banner') as HTMLDivElement;
const status = document.getElementById('status') as HTMLDivElement;

const seedInput = document.getElementById('seed') as HTMLInputElement;
const boundInput = document.getElementById('bound') as HTMLInputElement;
const depthInput = document.getElementById('depth') as HTMLInputElement;
const expandBoundInput = document.getElementById('expand-bound') as HTMLInputElement;
const expandDepthInput = document.getElementById('expand-depth') as HTMLInputElement;
const highlightInput = document.getElementById('highlight-n') as HTMLInputElement;

const renderer = new THREE.WebGLRenderer({ canvas, antialias: true });
renderer.setPixelRatio(window.devicePixelRatio);
const scene = new THREE.Scene();
scene.background = new THREE.Color(0xf3f2ee);
const camera = new THREE.PerspectiveCamera(50, 1, 0.1, 4000);
const controls = new OrbitControl(camera, canvas);
scene.add(new THREE.AmbientLight(0xffffff, 0.75));
const sun = new THREE.DirectionalLight(0xffffff, 1.4);
sun.position.set(30, 60, 20);
scene.add(sun);

function resize(): void {
  const w = canvas.clientWidth;
  const h = canvas.clientHeight;
  if (canvas.width !== w || canvas.height !== h) {
    renderer.setSize(w, h, false);
    camera.aspect = w / h;
    camera.updateProjectionMatrix();
  }
}

function animate(): void {
  resize();
  renderer.render(scene, camera);
  requestAnimationFrame(animate);
}

function showError(message: string): void {
  banner.textContent = message;
  banner.classList.add('visible');
}

function clearError(): void {
  banner.textContent = '';
  banner.classList.remove('visible');
}

function setStatus(message: string): void {
  status.textContent =
    `${graph.nodes.size} nodes, ${graph.arcs.size} arcs — ${message}`;
}

function rebuild(frameView: boolean): void {
  if (built) scene.remove(built.group);
  built = buildSceneGraph(graph, canvasLabelFactory);
  applyStyles(built, highlighted, selected);
  scene.add(built.group);
  if (frameView) {
    controls.frame(new THREE.Box3().setFromObject(built.group));
  }
}

async function loadRegion(): Promise<void> {
  const seq = sequencer.begin();
  const seed = Number(seedInput.value);
  const maxValue = Number(boundInput.value);
  const maxGen = depthInput.value === '' ? null : Number(depthInput.value);
  try {
    const region = await api.fetchRegion({ seed, maxValue, maxGen });
    if (!sequencer.isCurrent(seq)) return;
    clearError();
    graph = mergeRegion(emptyGraph(), region).graph;
    highlighted = new Set();
    selected = null;
    rebuild(true);
    setStatus(`loaded region seed=${seed} max_value=${maxValue}`);
  } catch (err) {
    if (!sequencer.isCurrent(seq)) return;
    showError(err instanceof ApiError ? err.message : String(err));
  }
}

async function expandAt(value: number): Promise<void> {
  const seq = sequencer.begin();
  const maxValue = Number(expandBoundInput.value);
  const maxGen = Number(expandDepthInput.value);
  if (value > maxValue) {
    setStatus(`node ${value} already beyond the expansion bound ${maxValue}`);
    return;
  }
  try {
    const region = await api.fetchRegion({ seed: value, maxValue, maxGen });
    if (!sequencer.isCurrent(seq)) return;
    clearError();
    const result = mergeRegion(graph, region, value);
    graph = result.graph;
    selected = value;
    rebuild(false); // camera preserved across merges
    if (result.addedNodes.length === 0) {
      setStatus(`expand at ${value}: nothing new within the bound`);
    } else {
      setStatus(`expand at ${value}: added ${result.addedNodes.length} nodes`);
    }
  } catch (err) {
    if (!sequencer.isCurrent(seq)) return;
    showError(err instanceof ApiError ? err.message : String(err));
  }
}

async function highlightTrajectory(): Promise<void> {
  const n = Number(highlightInput.value);
  try {
    const body = await api.fetchTrajectory(n);
    clearError();
    const result = computeHighlight(graph, body.steps);
    highlighted = new Set(result.present);
    if (built) applyStyles(built, highlighted, selected);
    setStatus(
      `trajectory of ${n}: ${result.present.length} highlighted, `
      + `${result.offscreen} off-screen`);
  } catch (err) {
    showError(err instanceof ApiError ? err.message : String(err));
  }
}

const raycaster = new THREE.Raycaster();
canvas.addEventListener('click', (event) => {
  if (!built) return;
  const rect = canvas.getBoundingClientRect();
  const ndc = new THREE.Vector2(
    ((event.clientX - rect.left) / rect.width) * 2 - 1,
    -((event.clientY - rect.top) / rect.height) * 2 + 1,
  );
  raycaster.setFromCamera(ndc, camera);
  const meshes = [...built.meshByValue.values()];
  const hit = raycaster.intersectObjects(meshes, false)[0];
  if (hit && typeof hit.object.userData.value === 'number') {
    void expandAt(hit.object.userData.value);
  }
});

document.getElementById('load')!.addEventListener('click', () => void loadRegion());
document.getElementById('highlight')!.addEventListener('click', () => void highlightTrajectory());
document.getElementById('clear-highlight')!.addEventListener('click', () => {
  highlighted = new Set();
  if (built) applyStyles(built, highlighted, selected);
  setStatus('highlight cleared');
});

void loadRegion();
animate();
