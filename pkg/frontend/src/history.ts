/**
 * Snapshot-based undo stack. Before each committed action the whole state
 * is pushed as a JSON string, so undo restores it byte-identically.
 */
export class UndoStack<T> {
  private snapshots: { action: string; state: string }[] = [];

  push(action: string, state: T): void {
    this.snapshots.push({ action, state: JSON.stringify(state) });
  }

  /** Pop the latest snapshot, or null if nothing to undo. */
  pop(): { action: string; state: T } | null {
    const top = this.snapshots.pop();
    if (!top) return null;
    return { action: top.action, state: JSON.parse(top.state) as T };
  }

  get depth(): number {
    return this.snapshots.length;
  }

  /** Action labels, oldest first. */
  labels(): string[] {
    return this.snapshots.map((s) => s.action);
  }

  clear(): void {
    this.snapshots.length = 0;
  }
}
