import * as THREE from 'three';

import type { GraphModel } from './graph.js';
import type { GraphNode } from './types.js';

/** World-units per grid unit; the layout plane maps onto the ground plane. */
export const SPREAD = 2.0;
export const NODE_RADIUS = 0.25 * SPREAD;

const nodeMaterial = new THREE.MeshLambertMaterial({ color: 0xdeb021 });
const phantomMaterial = new THREE.MeshLambertMaterial({
  color: 0x9aa3c0, transparent: true, opacity: 0.45,
});
const highlightMaterial = new THREE.MeshLambertMaterial({ color: 0xe04a2f });
const selectedMaterial = new THREE.MeshLambertMaterial({
  color: 0x3577d4, emissive: 0x10203a,
});
const arcMaterial = new THREE.LineBasicMaterial({ color: 0x5a5a6b });

const sphereGeometry = new THREE.SphereGeometry(NODE_RADIUS, 20, 14);

export function nodeWorldPosition(node: GraphNode): THREE.Vector3 {
  return new THREE.Vector3(node.x * SPREAD, 0, node.y * SPREAD);
}

export type LabelFactory = (node: GraphNode) => THREE.Object3D | null;

export interface BuiltScene {
  group: THREE.Group;
  meshByValue: Map<number, THREE.Mesh>;
}

/**
 * Build the renderable scene graph for a model: one sphere mesh per node
 * value (tagged with userData.value), one line segment per arc, and one
 * label per node when a factory is supplied.  Pure three.js object
 * construction; no renderer required, so tests can count meshes headlessly.
 */
export function buildSceneGraph(
  model: GraphModel,
  makeLabel: LabelFactory | null = null,
): BuiltScene {
  const group = new THREE.Group();
  const meshByValue = new Map<number, THREE.Mesh>();

  for (const node of model.nodes.values()) {
    const mesh = new THREE.Mesh(
      sphereGeometry,
      node.phantom ? phantomMaterial : nodeMaterial,
    );
    mesh.position.copy(nodeWorldPosition(node));
    mesh.userData.value = node.value;
    mesh.userData.phantom = node.phantom;
    group.add(mesh);
    meshByValue.set(node.value, mesh);

    if (makeLabel) {
      const label = makeLabel(node);
      if (label) {
        label.position.copy(mesh.position).add(new THREE.Vector3(0, NODE_RADIUS * 2.2, 0));
        group.add(label);
      }
    }
  }

  const points: number[] = [];
  for (const arc of model.arcs.values()) {
    const a = model.nodes.get(arc.from);
    const b = model.nodes.get(arc.to);
    if (!a || !b) continue;
    const pa = nodeWorldPosition(a);
    const pb = nodeWorldPosition(b);
    points.push(pa.x, pa.y, pa.z, pb.x, pb.y, pb.z);
  }
  if (points.length) {
    const geometry = new THREE.BufferGeometry();
    geometry.setAttribute('position', new THREE.Float32BufferAttribute(points, 3));
    group.add(new THREE.LineSegments(geometry, arcMaterial));
  }

  return { group, meshByValue };
}

/** Restyle meshes for highlight/selection without rebuilding the graph. */
export function applyStyles(
  built: BuiltScene,
  highlighted: ReadonlySet<number>,
  selected: number | null,
): void {
  for (const [value, mesh] of built.meshByValue) {
    if (value === selected) {
      mesh.material = selectedMaterial;
    } else if (highlighted.has(value)) {
      mesh.material = highlightMaterial;
    } else {
      mesh.material = mesh.userData.phantom ? phantomMaterial : nodeMaterial;
    }
  }
}

/** Canvas-texture sprite labels; browser only. */
export function canvasLabelFactory(node: GraphNode): THREE.Object3D | null {
  const text = String(node.value);
  const canvas = document.createElement('canvas');
  const ctx = canvas.getContext('2d');
  if (!ctx) return null;
  const font = '28px system-ui, sans-serif';
  ctx.font = font;
  const width = Math.ceil(ctx.measureText(text).width) + 12;
  canvas.width = width;
  canvas.height = 40;
  ctx.font = font;
  ctx.fillStyle = '#1b1b22';
  ctx.textBaseline = 'middle';
  ctx.fillText(text, 6, 20);
  const texture = new THREE.CanvasTexture(canvas);
  texture.minFilter = THREE.LinearFilter;
  const sprite = new THREE.Sprite(new THREE.SpriteMaterial({ map: texture, transparent: true }));
  const scale = 0.02 * SPREAD;
  sprite.scale.set(width * scale, 40 * scale, 1);
  return sprite;
}
