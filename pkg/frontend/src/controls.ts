import * as THREE from 'three';

/**
 * Minimal orbit/pan/zoom control: left-drag orbits around the target,
 * wheel zooms, right-drag (or shift-drag) pans in the ground plane.
 */
export class OrbitControl {
  private azimuth = -Math.PI / 2;
  private polar = 0.95;
  private distance = 40;
  readonly target = new THREE.Vector3();

  private dragging: 'orbit' | 'pan' | null = null;
  private lastX = 0;
  private lastY = 0;

  constructor(
    private readonly camera: THREE.PerspectiveCamera,
    element: HTMLElement,
  ) {
    element.addEventListener('pointerdown', (e) => {
      this.dragging = e.button === 2 || e.shiftKey ? 'pan' : 'orbit';
      this.lastX = e.clientX;
      this.lastY = e.clientY;
      element.setPointerCapture(e.pointerId);
    });
    element.addEventListener('pointerup', () => {
      this.dragging = null;
    });
    element.addEventListener('pointermove', (e) => {
      if (!this.dragging) return;
      const dx = e.clientX - this.lastX;
      const dy = e.clientY - this.lastY;
      this.lastX = e.clientX;
      this.lastY = e.clientY;
      if (this.dragging === 'orbit') {
        this.azimuth -= dx * 0.005;
        this.polar = THREE.MathUtils.clamp(this.polar - dy * 0.005, 0.05, Math.PI / 2 - 0.02);
      } else {
        const panScale = this.distance * 0.0016;
        const forward = new THREE.Vector3(
          Math.cos(this.azimuth), 0, Math.sin(this.azimuth));
        const right = new THREE.Vector3(-forward.z, 0, forward.x);
        this.target.addScaledVector(right, -dx * panScale);
        this.target.addScaledVector(forward, -dy * panScale);
      }
      this.update();
    });
    element.addEventListener('wheel', (e) => {
      e.preventDefault();
      this.distance = THREE.MathUtils.clamp(
        this.distance * Math.exp(e.deltaY * 0.001), 2, 600);
      this.update();
    }, { passive: false });
    element.addEventListener('contextmenu', (e) => e.preventDefault());
    this.update();
  }

  /** Frame a bounding box, keeping the current viewing angles. */
  frame(box: THREE.Box3): void {
    if (box.isEmpty()) return;
    box.getCenter(this.target);
    const size = box.getSize(new THREE.Vector3()).length();
    this.distance = THREE.MathUtils.clamp(size * 0.9 + 6, 6, 600);
    this.update();
  }

  update(): void {
    const sinP = Math.sin(this.polar);
    this.camera.position.set(
      this.target.x + this.distance * sinP * Math.cos(this.azimuth),
      this.target.y + this.distance * Math.cos(this.polar),
      this.target.z + this.distance * sinP * Math.sin(this.azimuth),
    );
    this.camera.lookAt(this.target);
  }
}
